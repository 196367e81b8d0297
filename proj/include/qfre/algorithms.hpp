#pragma once

#include "qfre/cost_expr.hpp"
#include "qfre/hardware.hpp"
#include "qfre/subroutines.hpp"
#include "qfre/topology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qfre {

// Random 8-SAT near the satisfiability threshold: one variable per group,
// clause_ratio sequential clause rounds per group.
struct QAOAInstance {
    int n_vars = 64;
    Rational clause_ratio{176};
    int precision_m = 64;
    int p_iterations = 1;
    int vars_per_node = 7;
    int clause_width = 8;

    Rational n_clauses() const { return Rational{n_vars} * clause_ratio; }
};

// Max-2-SAT via decoded interferometry: m-qubit clause register, weight-l
// unary/Dicke encoding, syndrome register packed 9 clause qubits per node.
struct DQIInstance {
    int n_vars = 50;
    int m_clauses = 200;
    int weight_l = 25;
    int precision_m = 64;
    int clause_qubits_per_node = 9;
};

// One named stage with its exact cost and report provenance.
struct StageReport {
    std::string stage;    // stable key, e.g. "clause_evaluation"
    std::string display;  // human label for tables
    std::string formula;
    CostExpr cost;
    Rational bell_slope;
    std::string notes;
    std::map<Rational, std::int64_t> evaluated;  // filled by evaluate_at

    std::int64_t cycles_at(const Rational& t) const { return cost.eval_rounded(t); }
};

struct AlgorithmReport {
    std::string algorithm;
    std::vector<StageReport> stages;
    StageReport total;

    void evaluate_at(const std::vector<Rational>& t_points);
};

// Stage keys, shared with the baseline scenario tables.
namespace stage_key {
inline constexpr const char* qaoa_fanout = "fanout";
inline constexpr const char* qaoa_clause = "clause_evaluation";
inline constexpr const char* qaoa_mixer = "mixer_rotations";
inline constexpr const char* dqi_setup_unary = "setup_unary";
inline constexpr const char* dqi_dicke = "dicke_preparation";
inline constexpr const char* dqi_constraint = "constraint_encoding";
inline constexpr const char* dqi_decode = "syndrome_decoding";
inline constexpr const char* dqi_hadamard = "hadamard_iqft";
}  // namespace stage_key

// -- QAOA stages ------------------------------------------------------------

// Intra-group GHZ (2) + inter-group broadcast rounds + worst-case
// rearrangement (num_groups) + the 2-cycle clause-evaluation start-up,
// all in T_Bell. 79*t at the defaults.
StageReport qaoa_fanout_stage(const QAOAInstance& inst, const QFlyTopology& topo,
                              const HardwareProfile& hw);

// Per clause round: partial-clause MCTs locally (5 Toffolis at width 8),
// overlapped with gathering from the other width-1 nodes, then one
// gridsynth phasing. Cross-node temporary ANDs uncompute for free.
StageReport qaoa_clause_stage(const QAOAInstance& inst, const HardwareProfile& hw);

// All mixer rotations synthesized locally in parallel: one gridsynth.
StageReport qaoa_mixer_stage(const QAOAInstance& inst, const HardwareProfile& hw);

AlgorithmReport qaoa_iteration(const QAOAInstance& inst, const QFlyTopology& topo,
                               const HardwareProfile& hw);

// The looser in-text bound for one iteration, kept for reference only; the
// per-stage decomposition above is what the reports use.
CostExpr qaoa_iteration_text_bound(const QAOAInstance& inst, const HardwareProfile& hw);

// -- DQI stages ---------------------------------------------------------------

// Gradient-state preparation (one gridsynth) plus (l-1) controlled
// rotations, each a 2 T_Bell global GHZ fan-out and one QCLA phase kickback.
StageReport dqi_setup_unary_stage(const DQIInstance& inst, const HardwareProfile& hw);

StageReport dqi_dicke_stage(const DQIInstance& inst, const HardwareProfile& hw);

// Parity mapping into a disjoint syndrome register: up to 2m cross-node
// Bell pairs, GHZ fan-outs keeping the time linear in the clause count.
StageReport dqi_constraint_stage(const DQIInstance& inst, const HardwareProfile& hw);

// Gauss-Jordan uncomputation of the error register:
// (2(2n + n*ceil(m/pack)) + n) * T_Bell.
StageReport dqi_decode_stage(const DQIInstance& inst, const HardwareProfile& hw);

// Binary inverse QFT = transversal Hadamards: zero cycles.
StageReport dqi_hadamard_stage(const DQIInstance& inst, const HardwareProfile& hw);

AlgorithmReport dqi_total(const DQIInstance& inst, const HardwareProfile& hw);

// In-text bound with the (n-1) unary multiplicity, reference only.
CostExpr dqi_total_text_bound(const DQIInstance& inst, const HardwareProfile& hw);

}  // namespace qfre
