#include "qfre/hardware.hpp"

#include <sstream>

namespace qfre {

Rational network_penalty(const HardwareProfile& profile) {
    if (profile.code_distance < 3)
        throw std::invalid_argument("network_penalty: code_distance must be >= 3");
    if (profile.raw_bell_rate_hz <= 0 || profile.distillation_yield <= 0 ||
        profile.code_cycle_us <= 0)
        throw std::invalid_argument("network_penalty: rates must be positive");
    // remote pair period in us = 1e6 / (rate * yield); local op = d * cycle_us
    const Rational remote_us = Rational{1000000} / (profile.raw_bell_rate_hz * profile.distillation_yield);
    const Rational local_us = Rational{profile.code_distance} * profile.code_cycle_us;
    return remote_us / local_us;
}

std::vector<ProfileFinding> validate_profile(const HardwareProfile& profile) {
    std::vector<ProfileFinding> findings;
    auto violation = [&](std::string msg) {
        findings.push_back({ProfileFinding::Severity::violation, std::move(msg)});
    };
    auto warning = [&](std::string msg) {
        findings.push_back({ProfileFinding::Severity::warning, std::move(msg)});
    };

    if (profile.t_toff <= 0) violation("t_toff must be positive");
    if (profile.gridsynth_a <= 0) violation("gridsynth_a must be positive");
    if (profile.gridsynth_b <= 0) violation("gridsynth_b must be positive");
    if (profile.code_cycle_us <= 0) violation("code_cycle_us must be positive");
    if (profile.code_distance < 3) violation("code_distance must be >= 3");
    if (profile.raw_bell_rate_hz <= 0) violation("raw_bell_rate_hz must be positive");
    if (profile.distillation_yield <= 0) violation("distillation_yield must be positive");
    if (profile.distillation_yield > 1) violation("distillation_yield must be at most 1");
    if (profile.t_bell_domain.lo <= 0 || profile.t_bell_domain.lo > profile.t_bell_domain.hi)
        violation("t_bell domain must satisfy 0 < lo <= hi");
    if (profile.t_states_per_node_per_cycle != 1)
        warning("cost formulas assume exactly one T state per node per cycle");

    if (!has_violation(findings)) {
        const Rational penalty = network_penalty(profile);
        if (!profile.t_bell_domain.contains(penalty)) {
            std::ostringstream os;
            os << "penalty " << penalty.convert_to<double>() << " outside modeled domain ["
               << to_string(profile.t_bell_domain.lo) << ", "
               << to_string(profile.t_bell_domain.hi) << "]";
            warning(os.str());
        }
    }
    return findings;
}

}  // namespace qfre
