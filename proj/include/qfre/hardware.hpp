#pragma once

#include "qfre/cost_expr.hpp"
#include "qfre/rational.hpp"

#include <string>
#include <vector>

namespace qfre {

// Bell pairs consumed per Toffoli for cross-node operation. The reference
// placements use r = 1 for the carry-lookahead layout and r = 1/3 elsewhere.
struct RoutingRatio {
    Rational value;

    explicit RoutingRatio(Rational v) : value(std::move(v)) {
        if (value < 0 || value > 1)
            throw std::invalid_argument("RoutingRatio must lie in [0, 1]");
    }
    static RoutingRatio qcla() { return RoutingRatio{Rational{1}}; }
    static RoutingRatio sparse() { return RoutingRatio{Rational{1, 3}}; }
    static RoutingRatio local() { return RoutingRatio{Rational{0}}; }
};

// Timing and code-layer constants of the architecture. Immutable in use;
// costs are functions of T_Bell only, with everything else folded into
// intercepts. code_distance exists for the network-penalty identity and
// documentation; it does not enter the cycle formulas.
struct HardwareProfile {
    TBellDomain t_bell_domain{};          // modeled network penalty range
    int t_toff = 4;                       // cycles per Toffoli, T-depth-1 construction
    Rational gridsynth_a{919, 100};       // T_Grid = a + b*m
    Rational gridsynth_b{3};
    Rational code_cycle_us{1};            // physical code cycle, microseconds
    int code_distance = 12;
    Rational raw_bell_rate_hz{100000};
    Rational distillation_yield{1, 3};
    int t_states_per_node_per_cycle = 1;  // documentation-only knob

    Rational logical_entanglement_rate_hz() const {
        return raw_bell_rate_hz * distillation_yield;
    }
    bool operator==(const HardwareProfile& other) const = default;
};

// Ratio of the local logical-op time to the logical Bell-pair period:
// local op = d code cycles, remote pair = 1/(raw_rate * yield) seconds.
// Reduces to 30/d at the default rates.
Rational network_penalty(const HardwareProfile& profile);

struct ProfileFinding {
    enum class Severity { violation, warning };
    Severity severity;
    std::string message;
};

// Consistency findings rather than exceptions: violations for broken
// invariants, a warning when the implied penalty leaves the modeled domain.
std::vector<ProfileFinding> validate_profile(const HardwareProfile& profile);

inline bool has_violation(const std::vector<ProfileFinding>& findings) {
    for (const auto& f : findings)
        if (f.severity == ProfileFinding::Severity::violation) return true;
    return false;
}

}  // namespace qfre
