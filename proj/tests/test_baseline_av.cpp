#include "qfre/baseline_av.hpp"

#include <doctest.h>

using namespace qfre;

TEST_CASE("av_time") {
    const AVScenario av2 = default_av2_scenario();
    CHECK(av_time(Rational{3648}, av2) == 19);
    CHECK(av_time(Rational{0}, av2) == 0);
    CHECK(av_time(Rational{6144}, av2) == 32);
    CHECK_THROWS_AS(av_time(Rational{-1}, av2), std::invalid_argument);

    // linear in blocks and t_bell before rounding
    AVScenario doubled = av2;
    doubled.t_bell = av2.t_bell * 2;
    CHECK(av_time_exact(Rational{1000}, doubled).value ==
          av_time_exact(Rational{1000}, av2).value * 2);
    CHECK(av_time_exact(Rational{2000}, av2).value ==
          av_time_exact(Rational{1000}, av2).value * 2);
}

TEST_CASE("av stage tables reproduce the baseline columns") {
    const AVScenario av2 = default_av2_scenario();
    const AVScenario av10 = default_av10_scenario();

    const AVTable qaoa2 = av_stage_table(av2, "qaoa");
    REQUIRE(qaoa2.stages.size() == 2);
    CHECK(qaoa2.stages[0].cycles == 396294);
    CHECK(qaoa2.stages[1].cycles == 2048);
    CHECK(qaoa2.total_cycles == 398342);

    const AVTable qaoa10 = av_stage_table(av10, "qaoa");
    CHECK(qaoa10.stages[0].cycles == 1936410);
    CHECK(qaoa10.stages[1].cycles == 9984);
    CHECK(qaoa10.total_cycles == 1946394);

    const AVTable dqi2 = av_stage_table(av2, "dqi");
    REQUIRE(dqi2.stages.size() == 4);
    CHECK(dqi2.stages[0].cycles == 1633);
    CHECK(dqi2.stages[1].cycles == 873077);
    CHECK(dqi2.stages[2].cycles == 208);
    CHECK(dqi2.stages[3].cycles == 208);
    CHECK(dqi2.total_cycles == 875126);

    const AVTable dqi10 = av_stage_table(av10, "dqi");
    CHECK(dqi10.stages[0].cycles == 7962);
    CHECK(dqi10.stages[1].cycles == 4256369);
    CHECK(dqi10.stages[2].cycles == 1042);
    CHECK(dqi10.stages[3].cycles == 1042);
    CHECK(dqi10.total_cycles == 4266415);
}

TEST_CASE("totals equal stage sums pre-rounding") {
    for (const AVScenario& sc : {default_av2_scenario(), default_av10_scenario()}) {
        for (const std::string algo : {"qaoa", "dqi"}) {
            const AVTable table = av_stage_table(sc, algo);
            Rational blocks{0};
            for (const auto& stage : table.stages) blocks += stage.blocks;
            CHECK(blocks == table.total_blocks);
            CHECK(av_time_exact(blocks, sc).value ==
                  av_time_exact(table.total_blocks, sc).value);
        }
    }
}

TEST_CASE("missing stage entries are an error") {
    AVScenario broken = default_av2_scenario();
    broken.block_table.erase("dqi.dicke_preparation");
    CHECK_THROWS_WITH_AS(av_stage_table(broken, "dqi"),
                         doctest::Contains("dqi.dicke_preparation"), std::invalid_argument);
    CHECK_THROWS_AS(av_stage_table(broken, "qft"), std::invalid_argument);
}

TEST_CASE("scenario scaling") {
    const AVScenario av10 = default_av10_scenario();
    const AVScenario scaled = av_scale_scenario(av10, Rational{10});
    CHECK(av_stage_table(scaled, "qaoa").total_cycles == 194639);

    const AVScenario same = av_scale_scenario(av10, Rational{1});
    CHECK(av_stage_table(same, "qaoa").total_cycles ==
          av_stage_table(av10, "qaoa").total_cycles);

    const AVScenario av2x10 = av_scale_scenario(default_av2_scenario(), Rational{10});
    CHECK(av_stage_table(av2x10, "qaoa").total_cycles == 39834);
    CHECK_THROWS_AS(av_scale_scenario(av10, Rational{0}), std::invalid_argument);
}
