#include "qfre/pipesim.hpp"

#include <doctest.h>

#include <random>

using namespace qfre;
using namespace qfre::pipesim;

namespace {

const HardwareProfile kHw{};
const QAOAInstance kQaoa{};

JobDag random_dag(std::mt19937& rng, const std::vector<ResourcePool>& pools) {
    std::uniform_int_distribution<int> count(1, 40);
    std::uniform_int_distribution<std::int64_t> duration(0, 20);
    std::uniform_int_distribution<int> percent(0, 99);
    JobDag dag;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Job job;
        job.id = i;
        job.name = "job" + std::to_string(i);
        job.duration = duration(rng);
        for (const auto& pool : pools) {
            if (percent(rng) < 50) {
                std::uniform_int_distribution<std::int64_t> demand(1, pool.capacity);
                job.demands[pool.name] = demand(rng);
            }
        }
        for (int j = 0; j < i; ++j)
            if (percent(rng) < 15) job.deps.push_back(j);
        dag.jobs.push_back(std::move(job));
    }
    return dag;
}

}  // namespace

TEST_CASE("simulate basics") {
    const std::vector<ResourcePool> two{{"m", 2}};
    const std::vector<ResourcePool> one{{"m", 1}};

    JobDag dag;
    dag.jobs.push_back({0, "a", 1, {{"m", 1}}, {}});
    dag.jobs.push_back({1, "b", 1, {{"m", 1}}, {}});
    CHECK(simulate(dag, two).makespan == 1);
    CHECK(simulate(dag, one).makespan == 2);

    // precedence chain
    JobDag chain;
    chain.jobs.push_back({0, "a", 3, {}, {}});
    chain.jobs.push_back({1, "b", 4, {}, {0}});
    CHECK(simulate(chain, {}).makespan == 7);

    // cycle detection
    JobDag cyclic;
    cyclic.jobs.push_back({0, "a", 1, {}, {1}});
    cyclic.jobs.push_back({1, "b", 1, {}, {0}});
    CHECK_THROWS_AS(simulate(cyclic, {}), std::invalid_argument);
    CHECK_THROWS_AS(critical_path_bound(cyclic), std::invalid_argument);

    // infeasible demand
    JobDag greedy;
    greedy.jobs.push_back({0, "a", 1, {{"m", 3}}, {}});
    CHECK_THROWS_AS(simulate(greedy, two), std::invalid_argument);

    CHECK(simulate(JobDag{}, {}).makespan == 0);
}

TEST_CASE("zero-duration jobs complete instantly") {
    JobDag dag;
    dag.jobs.push_back({0, "a", 0, {}, {}});
    dag.jobs.push_back({1, "b", 0, {}, {0}});
    dag.jobs.push_back({2, "c", 5, {}, {1}});
    const Schedule schedule = simulate(dag, {});
    CHECK(schedule.start[2] == 0);
    CHECK(schedule.makespan == 5);
}

TEST_CASE("deterministic and bounded on random DAGs") {
    std::mt19937 rng(555);
    const std::vector<ResourcePool> pools{{"bell", 2}, {"t_state", 3}};
    for (int trial = 0; trial < 200; ++trial) {
        const JobDag dag = random_dag(rng, pools);
        const Schedule first = simulate(dag, pools);
        const Schedule second = simulate(dag, pools);
        CHECK(first.start == second.start);
        CHECK(first.makespan >= critical_path_bound(dag));
        CHECK(first.makespan >= resource_bound(dag, pools));
    }
}

TEST_CASE("clause pipeline structure") {
    CHECK(build_clause_pipeline(kQaoa, kHw, Rational{10}, 0).jobs.empty());

    const JobDag single = build_clause_pipeline(kQaoa, kHw, Rational{10}, 1);
    const Schedule schedule = simulate(single, clause_pipeline_pools());
    CHECK(schedule.makespan == 2 * 10 + 70 + 201);  // start-up + max(70, 20) + T_Grid

    const JobDag full = build_clause_pipeline(kQaoa, kHw, Rational{10}, 176);
    const Schedule long_run = simulate(full, clause_pipeline_pools());
    CHECK(long_run.makespan == 2 * 10 + 176 * (70 + 201));  // 47,716 = stage + start-up

    // fractional T_Bell rounds up per consumption event
    const JobDag frac = build_clause_pipeline(kQaoa, kHw, Rational{5, 2}, 1);
    const Schedule frac_schedule = simulate(frac, clause_pipeline_pools());
    CHECK(frac_schedule.makespan == 2 * 3 + std::max<std::int64_t>(7 * 3, 20) + 201);
}

TEST_CASE("simulated pipeline matches the analytic clause stage") {
    const std::vector<Rational> points{Rational{2}, Rational{5}, Rational{10}};
    const auto checks = validate_analytic(kQaoa, kHw, points);
    REQUIRE(checks.size() == 3);

    CHECK(checks[0].per_round_simulated == 221);  // max(14,20) + 201
    CHECK(checks[1].per_round_simulated == 236);
    CHECK(checks[2].per_round_simulated == 271);
    for (const auto& check : checks) {
        CHECK(check.consistent);
        CHECK(check.per_round_simulated == check.per_round_analytic);
        CHECK(check.slack == 0);
        // total exceeds the analytic stage by exactly the start-up
        const StageReport stage = qaoa_clause_stage(kQaoa, kHw);
        CHECK(check.simulated_makespan - stage.cycles_at(check.t_bell) == check.startup);
    }
}
