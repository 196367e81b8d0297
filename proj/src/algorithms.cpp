#include "qfre/algorithms.hpp"

#include <sstream>
#include <stdexcept>

namespace qfre {

namespace {

StageReport make_stage(std::string key, std::string display, CostExpr cost, std::string notes) {
    Rational slope = cost.slope_at(cost.domain().midpoint());
    StageReport report;
    report.stage = std::move(key);
    report.display = std::move(display);
    report.formula = cost.to_string();
    report.cost = std::move(cost);
    report.bell_slope = std::move(slope);
    report.notes = std::move(notes);
    return report;
}

StageReport sum_stages(std::string algorithm, const std::vector<StageReport>& stages) {
    CostExpr total = stages.front().cost;
    for (std::size_t i = 1; i < stages.size(); ++i) total = total + stages[i].cost;
    return make_stage("total", "Total " + algorithm, std::move(total),
                      "exact sum of stage costs");
}

}  // namespace

void AlgorithmReport::evaluate_at(const std::vector<Rational>& t_points) {
    for (auto* report : [&] {
             std::vector<StageReport*> all;
             for (auto& s : stages) all.push_back(&s);
             all.push_back(&total);
             return all;
         }()) {
        report->evaluated.clear();
        for (const auto& t : t_points) report->evaluated[t] = report->cycles_at(t);
    }
}

StageReport qaoa_fanout_stage(const QAOAInstance& inst, const QFlyTopology& topo,
                              const HardwareProfile& hw) {
    if (inst.n_vars > topo.num_groups)
        throw std::invalid_argument("qaoa_fanout_stage: layout needs one group per variable");
    if (std::int64_t{inst.vars_per_node} * topo.nodes_per_group < inst.n_vars)
        throw std::invalid_argument("qaoa_fanout_stage: variables do not fit a single group");

    // broadcast (2 intra + inter rounds + rearrangement) plus the 2-cycle
    // clause start-up, folded here so the stage rows match the totals
    CostExpr cost = analytic_broadcast_cost(topo, hw.t_bell_domain) +
                    CostExpr::affine(Rational{0}, Rational{2}, hw.t_bell_domain);
    return make_stage(stage_key::qaoa_fanout, "Intra/Inter-Group Fan-out", std::move(cost),
                      "2 intra-group + " +
                          std::to_string((topo.num_groups - 2 + (int)topo.offsets.size()) /
                                         (int)topo.offsets.size()) +
                          " inter-group rounds + " + std::to_string(topo.num_groups) +
                          " rearrangement + 2 start-up, all T_Bell");
}

StageReport qaoa_clause_stage(const QAOAInstance& inst, const HardwareProfile& hw) {
    const Rational rounds_exact = inst.n_clauses() / inst.n_vars;  // one variable per group
    const BigInt rounds = ceil_rational(rounds_exact);
    const int gather_nodes = inst.clause_width - 1;
    const std::int64_t mct_toffolis = local_mct(inst.clause_width);
    const std::int64_t grid = gridsynth_cycles(inst.precision_m, hw);

    // per round: gather from the other nodes overlapped with the local MCTs,
    // then one phasing; Bell generation for the next round hides behind it
    CostExpr per_round =
        max_of(CostExpr::affine(Rational{0}, Rational{gather_nodes}, hw.t_bell_domain),
               CostExpr::constant(Rational{mct_toffolis * hw.t_toff}, hw.t_bell_domain)) +
        CostExpr::constant(Rational{grid}, hw.t_bell_domain);
    CostExpr cost = Rational{rounds} * per_round;

    std::ostringstream notes;
    notes << rounds << " rounds of (max(" << gather_nodes << " T_Bell, " << mct_toffolis
          << " T_Toff) + T_Grid); cross-node ANDs uncompute free, local cleanup pipelined";
    return make_stage(stage_key::qaoa_clause, "Clause Evaluation", std::move(cost), notes.str());
}

StageReport qaoa_mixer_stage(const QAOAInstance& inst, const HardwareProfile& hw) {
    const std::int64_t grid = gridsynth_cycles(inst.precision_m, hw);
    return make_stage(stage_key::qaoa_mixer, "Mixer Rotations",
                      CostExpr::constant(Rational{grid}, hw.t_bell_domain),
                      "all variables rotate locally in parallel, one gridsynth depth");
}

AlgorithmReport qaoa_iteration(const QAOAInstance& inst, const QFlyTopology& topo,
                               const HardwareProfile& hw) {
    AlgorithmReport report;
    report.algorithm = "QAOA Iteration";
    report.stages = {qaoa_fanout_stage(inst, topo, hw), qaoa_clause_stage(inst, hw),
                     qaoa_mixer_stage(inst, hw)};
    if (inst.p_iterations < 1)
        throw std::invalid_argument("qaoa_iteration: p_iterations must be >= 1");
    if (inst.p_iterations > 1) {
        // fan-outs are uncomputed and repaid each iteration
        for (auto& stage : report.stages) {
            stage.cost = Rational{inst.p_iterations} * stage.cost;
            stage.formula = stage.cost.to_string();
            stage.notes += "; x" + std::to_string(inst.p_iterations) + " iterations";
        }
    }
    report.total = sum_stages("QAOA Iteration", report.stages);
    return report;
}

CostExpr qaoa_iteration_text_bound(const QAOAInstance& inst, const HardwareProfile& hw) {
    const auto dom = hw.t_bell_domain;
    const Rational rounds{ceil_rational(inst.n_clauses() / inst.n_vars)};
    const std::int64_t grid = gridsynth_cycles(inst.precision_m, hw);
    CostExpr fanout = CostExpr::affine(Rational{0}, Rational{79}, dom);
    CostExpr gather = rounds * max_of(CostExpr::affine(Rational{0}, Rational{7}, dom),
                                      CostExpr::constant(Rational{5 * hw.t_toff}, dom));
    CostExpr phase = rounds * max_of(CostExpr::constant(Rational{156 * hw.t_toff}, dom),
                                     CostExpr::affine(Rational{0}, Rational{19}, dom));
    return fanout + gather + phase + CostExpr::constant(Rational{grid}, dom);
}

StageReport dqi_setup_unary_stage(const DQIInstance& inst, const HardwareProfile& hw) {
    if (inst.weight_l < 1) throw std::invalid_argument("dqi_setup_unary_stage: weight_l >= 1");
    const std::int64_t grid = gridsynth_cycles(inst.precision_m, hw);
    const CostExpr qcla = qcla_adder(inst.precision_m, RoutingRatio::qcla(), hw).cost;
    CostExpr per_cr = CostExpr::affine(Rational{0}, Rational{2}, hw.t_bell_domain) + qcla;
    CostExpr cost = CostExpr::constant(Rational{grid}, hw.t_bell_domain) +
                    Rational{inst.weight_l - 1} * per_cr;
    return make_stage(stage_key::dqi_setup_unary, "Setup & Unary Encoding", std::move(cost),
                      "gradient-state preparation + " + std::to_string(inst.weight_l - 1) +
                          " CR_y kickbacks of (2 T_Bell + T_QCLA)");
}

StageReport dqi_dicke_stage(const DQIInstance& inst, const HardwareProfile& hw) {
    SubroutineCost unit = dicke_unitary(inst.weight_l, inst.precision_m, RoutingRatio::sparse(), hw);
    return make_stage(stage_key::dqi_dicke,
                      "Dicke Preparation (l=" + std::to_string(inst.weight_l) + ")", unit.cost,
                      unit.notes);
}

StageReport dqi_constraint_stage(const DQIInstance& inst, const HardwareProfile& hw) {
    if (inst.m_clauses < 0) throw std::invalid_argument("dqi_constraint_stage: m_clauses >= 0");
    CostExpr cost =
        CostExpr::affine(Rational{0}, Rational{2 * std::int64_t{inst.m_clauses}}, hw.t_bell_domain);
    return make_stage(stage_key::dqi_constraint, "Constraint Encoding", std::move(cost),
                      "parity map into a disjoint syndrome register, up to 2m cross-node pairs");
}

StageReport dqi_decode_stage(const DQIInstance& inst, const HardwareProfile& hw) {
    const std::int64_t n = inst.n_vars;
    const std::int64_t pack = inst.clause_qubits_per_node;
    if (pack < 1) throw std::invalid_argument("dqi_decode_stage: clause_qubits_per_node >= 1");
    const std::int64_t cols = (inst.m_clauses + pack - 1) / pack;
    const std::int64_t slope = 2 * (2 * n + n * cols) + n;
    CostExpr cost = CostExpr::affine(Rational{0}, Rational{slope}, hw.t_bell_domain);
    return make_stage(stage_key::dqi_decode, "Syndrome Decoding", std::move(cost),
                      "Gauss-Jordan: pivot swaps, packed row elimination and uncompute, "
                      "echelon pass doubled for reversal");
}

StageReport dqi_hadamard_stage(const DQIInstance&, const HardwareProfile& hw) {
    return make_stage(stage_key::dqi_hadamard, "Hadamard Transform (iQFT)",
                      CostExpr::zero(hw.t_bell_domain),
                      "binary iQFT is a transversal Hadamard layer");
}

AlgorithmReport dqi_total(const DQIInstance& inst, const HardwareProfile& hw) {
    if (2 * inst.weight_l >= inst.m_clauses)
        throw std::invalid_argument("dqi_total: weight_l must satisfy l < m/2");
    AlgorithmReport report;
    report.algorithm = "DQI Execution";
    report.stages = {dqi_setup_unary_stage(inst, hw), dqi_dicke_stage(inst, hw),
                     dqi_constraint_stage(inst, hw), dqi_decode_stage(inst, hw),
                     dqi_hadamard_stage(inst, hw)};
    report.total = sum_stages("DQI Execution", report.stages);
    return report;
}

CostExpr dqi_total_text_bound(const DQIInstance& inst, const HardwareProfile& hw) {
    const auto dom = hw.t_bell_domain;
    const std::int64_t grid = gridsynth_cycles(inst.precision_m, hw);
    const CostExpr qcla = qcla_adder(inst.precision_m, RoutingRatio::qcla(), hw).cost;
    const std::int64_t n = inst.n_vars;
    const std::int64_t cols = (inst.m_clauses + inst.clause_qubits_per_node - 1) /
                              inst.clause_qubits_per_node;
    CostExpr unary = Rational{n - 1} *
                     (CostExpr::affine(Rational{0}, Rational{2}, dom) + qcla);
    CostExpr dicke = dicke_unitary(inst.weight_l, inst.precision_m, RoutingRatio::sparse(), hw).cost;
    CostExpr tail = CostExpr::affine(
        Rational{0}, Rational{2 * std::int64_t{inst.m_clauses} + 5 * n + 2 * n * cols}, dom);
    return CostExpr::constant(Rational{grid}, dom) + unary + dicke + tail;
}

}  // namespace qfre
