#pragma once

#include "qfre/cost_expr.hpp"
#include "qfre/hardware.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace qfre {

// Cost model for one primitive, with enough provenance to render a report
// row. bell_slope counts serialized Bell consumptions per unit T_Bell,
// taken at the domain midpoint.
struct SubroutineCost {
    std::string name;
    CostExpr cost;
    std::optional<std::int64_t> toffoli_count;  // absent when only depth is modeled
    Rational bell_slope;
    std::string notes;
};

SubroutineCost make_subroutine(std::string name, CostExpr cost,
                               std::optional<std::int64_t> toffoli_count, std::string notes);

// ceil(log2(n)) for n >= 1, with log2(1) = 0.
int ceil_log2(std::int64_t n);

// Constant number of Toffoli layers beyond the log depth of the Sklansky
// prefix tree.
inline constexpr int kQclaExtraLayers = 4;

// Ripple-carry adder with temporary-AND uncomputation: n-1 sequential
// Toffolis, each paying the cross-node ratio r in Bell pairs.
SubroutineCost gidney_adder(int n_bits, const RoutingRatio& r, const HardwareProfile& hw);

// Carry-lookahead adder on the Sklansky prefix tree: ceil(log2 n) + 4
// parallel Toffoli layers, each interspersed with Bell consumption.
SubroutineCost qcla_adder(int n_bits, const RoutingRatio& r, const HardwareProfile& hw);

// Exact pre-rounding synthesis cost a + b*m; the returned cost is the
// rounded constant (sequential, no T_Bell dependence).
Rational gridsynth_cycles_exact(int precision_m, const HardwareProfile& hw);
std::int64_t gridsynth_cycles(int precision_m, const HardwareProfile& hw);
SubroutineCost gridsynth_rotation(int precision_m, const HardwareProfile& hw);

// Rotation through the phase-gradient catalyst: one m-bit QCLA addition.
// The controlled angle write and the measurement-based uncompute are free.
SubroutineCost phase_gradient_rotation(int precision_m, const RoutingRatio& r,
                                       const HardwareProfile& hw);

// Smallest precision m where the QCLA-based phase gradient beats gridsynth:
// (ceil(log2 m) + 4)(T_Toff + r*t) < a + b*m, scanned from m = 1.
// Throws when no crossover exists below the guard.
int rotation_crossover(const RoutingRatio& r, const Rational& t_bell, const HardwareProfile& hw,
                       int guard_m = 4096);

// Phasing by a fixed linear weight. With the customized gradient state
// already prepared this is exactly a phase-gradient rotation; otherwise the
// one-time preparation is priced at one gridsynth synthesis.
SubroutineCost linear_phasing(int precision_m, const RoutingRatio& r, const HardwareProfile& hw,
                              bool custom_gradient_prepared);

// Doubly-controlled rotation via the temporary-AND gadget: one Toffoli
// (plus its routing share) in front of the rotation; the X-basis
// measurement uncompute is free.
SubroutineCost ccr_tacu(const RoutingRatio& r, const HardwareProfile& hw,
                        const SubroutineCost& rotation);

// Toffoli count of an intra-node multi-controlled Toffoli: the 8-control
// clause evaluation uses the conditionally-clean-ancilla average of 5,
// anything else the plain n-1 staircase.
std::int64_t local_mct(int num_controls);

enum class FanOutKind { intra_group, inter_node };

// Intra-group GHZ fan-out is 2 T_Bell regardless of target count on the
// non-blocking switch; an inter-node point set pays one routing step per
// |offsets| targets. Bell pairs consumed equal the target count either way.
SubroutineCost fan_out(FanOutKind kind, int num_targets, const HardwareProfile& hw,
                       int num_offsets = 6);

// Dicke state unitary built from weight-distribution ladders:
// depth = k(k+1)/2 * ceil(log2 k) controlled rotations, each costing one
// gridsynth plus two Toffoli steps (the CCR_Y gadget and the matching unary
// subtraction). ceil(log2 1) is taken as 1 so weight 1 costs one step.
// double_rotation prices the CR_Y as two half-angle syntheses instead of
// one; the reported tables use single rotation.
SubroutineCost dicke_unitary(int weight_k, int precision_m, const RoutingRatio& r,
                             const HardwareProfile& hw, bool double_rotation = false);

std::int64_t dicke_ladder_depth(int weight_k);

}  // namespace qfre
