#pragma once

#include "qfre/cost_expr.hpp"
#include "qfre/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qfre {

// Active-volume surface-code baseline: the same physical footprint processes
// at most blocks_per_cycle logical blocks per cycle, and one of its cycles
// costs t_bell of our logical cycles (remote lattice surgery). Block counts
// per stage come from the shipped scenario tables; they are regression
// fixtures back-derived from the reported columns, not derivations.
struct AVScenario {
    std::string label;          // e.g. "AV_2"
    Rational t_bell;            // cycle-time normalization of this column
    Rational blocks_per_cycle{384};
    std::map<std::string, Rational> block_table;  // "<algo>.<stage>" -> blocks
};

// Time to process a block count, in this artifact's logical cycles.
CycleCount av_time_exact(const Rational& blocks, const AVScenario& scenario);
std::int64_t av_time(const Rational& blocks, const AVScenario& scenario);

struct AVStageTime {
    std::string stage;
    Rational blocks;
    std::int64_t cycles;
};

struct AVTable {
    std::string algorithm;
    std::vector<AVStageTime> stages;
    Rational total_blocks;
    std::int64_t total_cycles;  // rounded from the exact block sum
};

// Per-stage times plus the total for one algorithm ("qaoa" or "dqi").
// Throws when the scenario lacks a stage the algorithm requires.
AVTable av_stage_table(const AVScenario& scenario, const std::string& algorithm);

// Grants the baseline `multiplier` times the hardware: throughput scales,
// times shrink proportionally.
AVScenario av_scale_scenario(const AVScenario& scenario, const Rational& multiplier);

// Scenario fixtures matching the shipped config files.
AVScenario default_av2_scenario();
AVScenario default_av10_scenario();

// Stage keys each algorithm requires in a scenario table.
const std::vector<std::string>& av_required_stages(const std::string& algorithm);

}  // namespace qfre
