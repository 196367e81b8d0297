#include "qfre/subroutines.hpp"

#include <stdexcept>
#include <string>

namespace qfre {

namespace {

// cost of one Toffoli step including its cross-node share: T_Toff + r*t
CostExpr toffoli_step(const RoutingRatio& r, const HardwareProfile& hw, std::int64_t count = 1) {
    return CostExpr::affine(Rational{count} * hw.t_toff, Rational{count} * r.value,
                            hw.t_bell_domain);
}

void require_positive(int value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

SubroutineCost make_subroutine(std::string name, CostExpr cost,
                               std::optional<std::int64_t> toffoli_count, std::string notes) {
    Rational slope = cost.slope_at(cost.domain().midpoint());
    return SubroutineCost{std::move(name), std::move(cost), toffoli_count, std::move(slope),
                          std::move(notes)};
}

int ceil_log2(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("ceil_log2: n must be >= 1");
    int bits = 0;
    std::int64_t reach = 1;
    while (reach < n) {
        reach <<= 1;
        ++bits;
    }
    return bits;
}

SubroutineCost gidney_adder(int n_bits, const RoutingRatio& r, const HardwareProfile& hw) {
    require_positive(n_bits, "gidney_adder: n_bits");
    const std::int64_t toffolis = n_bits - 1;
    return make_subroutine("gidney_adder", toffoli_step(r, hw, toffolis), toffolis,
                           "sequential ripple carry, " + std::to_string(toffolis) + " TACU Toffolis");
}

SubroutineCost qcla_adder(int n_bits, const RoutingRatio& r, const HardwareProfile& hw) {
    require_positive(n_bits, "qcla_adder: n_bits");
    const std::int64_t layers = ceil_log2(n_bits) + kQclaExtraLayers;
    return make_subroutine("qcla_adder", toffoli_step(r, hw, layers), std::nullopt,
                           "Sklansky prefix tree, " + std::to_string(layers) + " Toffoli layers");
}

Rational gridsynth_cycles_exact(int precision_m, const HardwareProfile& hw) {
    require_positive(precision_m, "gridsynth: precision_m");
    return hw.gridsynth_a + hw.gridsynth_b * precision_m;
}

std::int64_t gridsynth_cycles(int precision_m, const HardwareProfile& hw) {
    return round_to_i64(gridsynth_cycles_exact(precision_m, hw));
}

SubroutineCost gridsynth_rotation(int precision_m, const HardwareProfile& hw) {
    const std::int64_t cycles = gridsynth_cycles(precision_m, hw);
    return make_subroutine("gridsynth_rotation",
                           CostExpr::constant(Rational{cycles}, hw.t_bell_domain), std::nullopt,
                           "sequential Clifford+T synthesis at " + std::to_string(precision_m) +
                               " bits; no network dependence");
}

SubroutineCost phase_gradient_rotation(int precision_m, const RoutingRatio& r,
                                       const HardwareProfile& hw) {
    require_positive(precision_m, "phase_gradient_rotation: precision_m");
    SubroutineCost adder = qcla_adder(precision_m, r, hw);
    return make_subroutine("phase_gradient_rotation", adder.cost, adder.toffoli_count,
                           "one m-bit QCLA addition into the gradient catalyst; "
                           "angle write and uncompute are measurement-based and free");
}

int rotation_crossover(const RoutingRatio& r, const Rational& t_bell, const HardwareProfile& hw,
                       int guard_m) {
    if (!hw.t_bell_domain.contains(t_bell))
        throw std::domain_error("rotation_crossover: t_bell outside domain");
    const Rational step = Rational{hw.t_toff} + r.value * t_bell;
    for (int m = 1; m <= guard_m; ++m) {
        const Rational lhs = Rational{ceil_log2(m) + kQclaExtraLayers} * step;
        const Rational rhs = gridsynth_cycles_exact(m, hw);
        if (lhs < rhs) return m;
    }
    throw std::runtime_error("rotation_crossover: no crossover below m = " +
                             std::to_string(guard_m));
}

SubroutineCost linear_phasing(int precision_m, const RoutingRatio& r, const HardwareProfile& hw,
                              bool custom_gradient_prepared) {
    SubroutineCost base = phase_gradient_rotation(precision_m, r, hw);
    if (custom_gradient_prepared) {
        return make_subroutine("linear_phasing", base.cost, base.toffoli_count,
                               "weight folded into a pre-prepared gradient state");
    }
    const std::int64_t prep = gridsynth_cycles(precision_m, hw);
    return make_subroutine(
        "linear_phasing", base.cost + CostExpr::constant(Rational{prep}, hw.t_bell_domain),
        base.toffoli_count,
        "includes one-time custom gradient preparation (" + std::to_string(prep) + " cycles)");
}

SubroutineCost ccr_tacu(const RoutingRatio& r, const HardwareProfile& hw,
                        const SubroutineCost& rotation) {
    CostExpr cost = toffoli_step(r, hw) + rotation.cost;
    std::optional<std::int64_t> toffolis;
    if (rotation.toffoli_count) toffolis = *rotation.toffoli_count + 1;
    else toffolis = 1;
    return make_subroutine("ccr_" + rotation.name, std::move(cost), toffolis,
                           "temporary-AND gadget in front of " + rotation.name +
                               "; uncompute by X-basis measurement is free");
}

std::int64_t local_mct(int num_controls) {
    if (num_controls < 2) throw std::invalid_argument("local_mct: need at least 2 controls");
    if (num_controls == 8) return 5;  // conditionally-clean-ancilla average for the clause width
    return num_controls - 1;
}

SubroutineCost fan_out(FanOutKind kind, int num_targets, const HardwareProfile& hw,
                       int num_offsets) {
    if (num_targets < 0) throw std::invalid_argument("fan_out: negative target count");
    if (num_offsets < 1) throw std::invalid_argument("fan_out: need at least one offset");
    if (num_targets == 0) {
        return make_subroutine("fan_out", CostExpr::zero(hw.t_bell_domain), 0, "no targets");
    }
    if (kind == FanOutKind::intra_group) {
        return make_subroutine(
            "fan_out", CostExpr::affine(Rational{0}, Rational{2}, hw.t_bell_domain), 0,
            "GHZ fan-out to " + std::to_string(num_targets) +
                " targets on the non-blocking intra-group switch; consumes one Bell pair per target");
    }
    const int rounds = (num_targets + num_offsets - 1) / num_offsets;
    return make_subroutine(
        "fan_out", CostExpr::affine(Rational{0}, Rational{rounds}, hw.t_bell_domain), 0,
        std::to_string(num_targets) + " group targets over " + std::to_string(num_offsets) +
            " chordal links, " + std::to_string(rounds) + " routing rounds");
}

std::int64_t dicke_ladder_depth(int weight_k) {
    require_positive(weight_k, "dicke_unitary: weight_k");
    const std::int64_t levels = std::max(ceil_log2(weight_k), 1);
    return std::int64_t{weight_k} * (weight_k + 1) / 2 * levels;
}

SubroutineCost dicke_unitary(int weight_k, int precision_m, const RoutingRatio& r,
                             const HardwareProfile& hw, bool double_rotation) {
    const std::int64_t depth = dicke_ladder_depth(weight_k);
    const std::int64_t grid = gridsynth_cycles(precision_m, hw);
    const int rotations_per_step = double_rotation ? 2 : 1;
    // per ladder step: one (or two) rotations plus the CCR_Y Toffoli and the
    // matching unary-subtraction Toffoli, each with its routing share
    CostExpr per_step = CostExpr::constant(Rational{rotations_per_step * grid}, hw.t_bell_domain) +
                        toffoli_step(r, hw, 2);
    return make_subroutine(
        "dicke_unitary", Rational{depth} * per_step, 2 * depth,
        "weight " + std::to_string(weight_k) + ", " + std::to_string(depth) +
            " CCR_Y ladder steps of (T_Grid + 2 Toffoli) each");
}

}  // namespace qfre
