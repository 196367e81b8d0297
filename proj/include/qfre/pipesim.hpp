#pragma once

#include "qfre/algorithms.hpp"
#include "qfre/hardware.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qfre {
namespace pipesim {

// One schedulable unit. Demands are renewable: a job occupies `amount`
// tokens of each named pool for its whole duration.
struct Job {
    int id = 0;  // ids are dense indices into the DAG
    std::string name;
    std::int64_t duration = 0;
    std::map<std::string, std::int64_t> demands;
    std::vector<int> deps;
};

struct ResourcePool {
    std::string name;
    std::int64_t capacity = 1;  // per cycle
};

struct JobDag {
    std::vector<Job> jobs;  // job id == index
};

struct Schedule {
    std::vector<std::int64_t> start;
    std::int64_t makespan = 0;
};

// Deterministic greedy list schedule: whenever a job completes, ready jobs
// are scanned in id order and started if their demands fit. Throws on
// cyclic dependencies or a demand exceeding pool capacity.
Schedule simulate(const JobDag& dag, const std::vector<ResourcePool>& pools);

// Longest dependency chain by duration.
std::int64_t critical_path_bound(const JobDag& dag);

// ceil(total work / capacity), maximized over pools.
std::int64_t resource_bound(const JobDag& dag, const std::vector<ResourcePool>& pools);

// The clause-evaluation pipeline: a 2 T_Bell start-up, then per round a
// local MCT (5 Toffolis) overlapped with a 7-pair gather, followed by one
// gridsynth phasing; Bell generation for the next round runs during the
// phasing on a single channel. The gather serializes its consumptions, one
// T_Bell each; a tree-parallel gather inside the group could only shorten
// it, so the analytic bound stays safe. Fractional T_Bell rounds up per
// consumption event. rounds = 0 yields an empty DAG.
JobDag build_clause_pipeline(const QAOAInstance& inst, const HardwareProfile& hw,
                             const Rational& t_bell, int rounds);

std::vector<ResourcePool> clause_pipeline_pools();

struct PipelineCheck {
    Rational t_bell;
    std::int64_t simulated_makespan = 0;
    std::int64_t startup = 0;
    std::int64_t per_round_simulated = 0;
    std::int64_t per_round_analytic = 0;
    std::int64_t slack = 0;  // analytic - simulated per round; negative flags a modeling inconsistency
    bool consistent = false;
};

// Simulates the full clause pipeline at each t and compares the steady-state
// per-round cost against the analytic stage formula.
std::vector<PipelineCheck> validate_analytic(const QAOAInstance& inst, const HardwareProfile& hw,
                                             const std::vector<Rational>& t_points);

}  // namespace pipesim
}  // namespace qfre
