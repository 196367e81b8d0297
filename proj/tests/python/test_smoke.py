"""Smoke tests for the qfre extension module.

Runnable directly (python3 test_smoke.py) or under pytest.
"""

import sys
from fractions import Fraction

import qfre


def test_cost_algebra():
    clause = qfre.max_of(
        qfre.CostExpr.affine(0, 7), qfre.CostExpr.constant(20)
    ) + qfre.CostExpr.constant(201)
    stage = Fraction(176) * clause
    assert stage.eval_rounded(2) == 38896
    assert stage.eval_rounded(10) == 47696
    assert stage.eval(5) == Fraction(41536)
    assert stage.slope_at(3) == Fraction(1232)
    assert qfre.round_cycles(Fraction(5, 2)) == 3
    assert qfre.crossover_t(qfre.CostExpr.constant(20), qfre.CostExpr.affine(0, 7)) == Fraction(20, 7)


def test_exact_fractions_cross_the_boundary():
    dicke = qfre.dicke_unitary(25, 64, Fraction(1, 3))
    assert dicke.cost.eval(2) == Fraction(1025375, 3)  # 341,791.666...
    assert dicke.cost.eval_rounded(2) == 341792
    assert dicke.bell_slope == Fraction(3250, 3)


def test_hardware_and_topology():
    hw = qfre.HardwareProfile()
    hw.code_distance = 5
    assert qfre.network_penalty(hw) == Fraction(6)
    assert qfre.validate_profile(hw) == []

    topo = qfre.build_topology(64, 12, [1, 2, 4, 8, 16, 32])
    assert qfre.diameter(topo) == 3
    assert qfre.switch_ports(topo) == 18
    assert len(qfre.broadcast_rounds(topo, "source_limited")) == 11
    assert len(qfre.broadcast_rounds(topo, "relaying")) <= 11
    assert qfre.route(topo, 0, 32) == [0, 32]


def test_subroutines():
    assert qfre.gidney_adder(64, Fraction(1, 3)).cost.eval_rounded(2) == 294
    assert qfre.qcla_adder(64, 1).cost.eval_rounded(10) == 140
    assert qfre.gridsynth_cycles(64) == 201
    assert qfre.rotation_crossover(1, 10) == 44
    assert qfre.local_mct(8) == 5


def test_algorithm_reports():
    qaoa = qfre.qaoa_iteration()
    assert [qaoa.total.cycles_at(t) for t in (2, 5, 10)] == [39255, 42132, 48687]
    assert [s.stage for s in qaoa.stages] == ["fanout", "clause_evaluation", "mixer_rotations"]

    dqi = qfre.dqi_total()
    assert [dqi.total.cycles_at(t) for t in (2, 5, 10)] == [349429, 362393, 383999]
    assert dqi.stages[-1].cycles_at(10) == 0  # iQFT is free


def test_baseline_and_scaling():
    av10 = qfre.default_av10_scenario()
    table = qfre.av_stage_table(av10, "qaoa")
    assert table.total_cycles == 1946394
    scaled = qfre.av_scale_scenario(av10, 10)
    assert qfre.av_stage_table(scaled, "qaoa").total_cycles == 194639


def test_pipeline_validation():
    checks = qfre.validate_pipeline()
    assert [c.per_round_simulated for c in checks] == [221, 236, 271]
    assert all(c.consistent for c in checks)


def test_reference_check():
    cells, mismatches = qfre.reference_check()
    assert cells == 59
    assert mismatches == []
    assert "39,255" in qfre.table_markdown()


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok      {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAILED  {name}: {exc}")
    sys.exit(1 if failures else 0)
