#include "qfre/baseline_av.hpp"

#include "qfre/algorithms.hpp"

#include <stdexcept>

namespace qfre {

CycleCount av_time_exact(const Rational& blocks, const AVScenario& scenario) {
    if (blocks < 0) throw std::invalid_argument("av_time: negative block count");
    if (scenario.blocks_per_cycle <= 0)
        throw std::invalid_argument("av_time: blocks_per_cycle must be positive");
    return CycleCount(blocks / scenario.blocks_per_cycle * scenario.t_bell);
}

std::int64_t av_time(const Rational& blocks, const AVScenario& scenario) {
    return av_time_exact(blocks, scenario).rounded();
}

const std::vector<std::string>& av_required_stages(const std::string& algorithm) {
    static const std::vector<std::string> qaoa{stage_key::qaoa_clause, stage_key::qaoa_mixer};
    static const std::vector<std::string> dqi{stage_key::dqi_setup_unary, stage_key::dqi_dicke,
                                              stage_key::dqi_constraint, stage_key::dqi_decode};
    if (algorithm == "qaoa") return qaoa;
    if (algorithm == "dqi") return dqi;
    throw std::invalid_argument("av_required_stages: unknown algorithm '" + algorithm + "'");
}

AVTable av_stage_table(const AVScenario& scenario, const std::string& algorithm) {
    AVTable table;
    table.algorithm = algorithm;
    table.total_blocks = 0;
    for (const auto& stage : av_required_stages(algorithm)) {
        const std::string key = algorithm + "." + stage;
        auto it = scenario.block_table.find(key);
        if (it == scenario.block_table.end())
            throw std::invalid_argument("av_stage_table: scenario '" + scenario.label +
                                        "' has no block count for " + key);
        table.stages.push_back({stage, it->second, av_time(it->second, scenario)});
        table.total_blocks += it->second;
    }
    table.total_cycles = av_time(table.total_blocks, scenario);
    return table;
}

AVScenario av_scale_scenario(const AVScenario& scenario, const Rational& multiplier) {
    if (multiplier <= 0) throw std::invalid_argument("av_scale_scenario: multiplier must be > 0");
    AVScenario scaled = scenario;
    scaled.blocks_per_cycle = scenario.blocks_per_cycle * multiplier;
    if (multiplier != 1) scaled.label += " x" + to_string(multiplier);
    return scaled;
}

// Block counts are cycles * 384 / t_bell of the reported columns; the two
// scenarios carry independent tables because the columns are not a single
// count rescaled by t_bell.
AVScenario default_av2_scenario() {
    AVScenario sc;
    sc.label = "AV_2";
    sc.t_bell = 2;
    sc.block_table = {
        {"core.gidney_adder", Rational{3648}},
        {"core.gridsynth_rotation", Rational{6144}},
        {"qaoa.clause_evaluation", Rational{76088448}},
        {"qaoa.mixer_rotations", Rational{393216}},
        {"dqi.setup_unary", Rational{313536}},
        {"dqi.dicke_preparation", Rational{167630784}},
        {"dqi.constraint_encoding", Rational{39936}},
        {"dqi.syndrome_decoding", Rational{39936}},
    };
    return sc;
}

AVScenario default_av10_scenario() {
    AVScenario sc;
    sc.label = "AV_10";
    sc.t_bell = 10;
    sc.block_table = {
        {"core.gidney_adder", Rational{18048, 5}},
        {"core.gridsynth_rotation", Rational{29952, 5}},
        {"qaoa.clause_evaluation", Rational{74358144}},
        {"qaoa.mixer_rotations", Rational{1916928, 5}},
        {"dqi.setup_unary", Rational{1528704, 5}},
        {"dqi.dicke_preparation", Rational{817222848, 5}},
        {"dqi.constraint_encoding", Rational{200064, 5}},
        {"dqi.syndrome_decoding", Rational{200064, 5}},
    };
    return sc;
}

}  // namespace qfre
