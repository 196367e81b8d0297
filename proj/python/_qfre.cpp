#include "qfre/algorithms.hpp"
#include "qfre/baseline_av.hpp"
#include "qfre/config.hpp"
#include "qfre/pipesim.hpp"
#include "qfre/report.hpp"
#include "qfre/subroutines.hpp"
#include "qfre/topology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// qfre::Rational <-> fractions.Fraction (also accepts int and "p/q" strings)
namespace pybind11 {
namespace detail {

template <>
struct type_caster<qfre::Rational> {
    PYBIND11_TYPE_CASTER(qfre::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (isinstance<str>(src)) {
            auto parsed = qfre::parse_rational(src.cast<std::string>());
            if (!parsed) return false;
            value = *parsed;
            return true;
        }
        if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
            const auto num = str(src.attr("numerator")).cast<std::string>();
            const auto den = str(src.attr("denominator")).cast<std::string>();
            value = qfre::Rational(qfre::BigInt(num), qfre::BigInt(den));
            return true;
        }
        return false;
    }

    static handle cast(const qfre::Rational& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(py::str(qfre::to_string(src))).release();
    }
};

}  // namespace detail
}  // namespace pybind11

namespace {

using namespace qfre;

RoutingRatio ratio(const Rational& r) { return RoutingRatio{r}; }

FanOutKind fan_out_kind(const std::string& kind) {
    if (kind == "intra_group") return FanOutKind::intra_group;
    if (kind == "inter_node") return FanOutKind::inter_node;
    throw std::invalid_argument("fan_out kind must be 'intra_group' or 'inter_node'");
}

BroadcastMode broadcast_mode(const std::string& mode) {
    if (mode == "source_limited") return BroadcastMode::source_limited;
    if (mode == "relaying") return BroadcastMode::relaying;
    throw std::invalid_argument("broadcast mode must be 'source_limited' or 'relaying'");
}

}  // namespace

PYBIND11_MODULE(_qfre, m) {
    m.doc() = "Logical-cycle resource estimation for distributed Pauli-based computation "
              "on a Q-Fly interconnect: exact cost algebra, topology schedules, subroutine "
              "and algorithm stage models, the active-volume baseline and a pipeline "
              "scheduling validator.";

    py::class_<TBellDomain>(m, "TBellDomain")
        .def(py::init<>())
        .def_readwrite("lo", &TBellDomain::lo)
        .def_readwrite("hi", &TBellDomain::hi)
        .def("contains", &TBellDomain::contains);

    py::class_<CostExpr>(m, "CostExpr")
        .def_static(
            "affine",
            [](const Rational& intercept, const Rational& slope) {
                return CostExpr::affine(intercept, slope);
            },
            py::arg("intercept"), py::arg("slope"))
        .def_static("constant", [](const Rational& v) { return CostExpr::constant(v); })
        .def_static("zero", [] { return CostExpr::zero(); })
        .def("eval", [](const CostExpr& e, const Rational& t) { return e.eval(t).value; })
        .def("eval_rounded", &CostExpr::eval_rounded)
        .def("slope_at", &CostExpr::slope_at)
        .def("scale", &CostExpr::scale)
        .def("max_with", &CostExpr::max_with)
        .def("__add__", [](const CostExpr& a, const CostExpr& b) { return a + b; })
        .def("__rmul__", [](const CostExpr& a, const Rational& c) { return a.scale(c); })
        .def("__eq__", [](const CostExpr& a, const CostExpr& b) { return a == b; })
        .def("__str__", &CostExpr::to_string)
        .def("__repr__", [](const CostExpr& e) { return "CostExpr(" + e.to_string() + ")"; });

    m.def("max_of", [](const CostExpr& a, const CostExpr& b) { return max_of(a, b); });
    m.def("round_cycles", [](const Rational& x) { return round_cycles(x); });
    m.def("crossover_t",
          [](const CostExpr& f, const CostExpr& g) { return crossover_t(f, g); });

    py::class_<HardwareProfile>(m, "HardwareProfile")
        .def(py::init<>())
        .def_readwrite("t_bell_domain", &HardwareProfile::t_bell_domain)
        .def_readwrite("t_toff", &HardwareProfile::t_toff)
        .def_readwrite("gridsynth_a", &HardwareProfile::gridsynth_a)
        .def_readwrite("gridsynth_b", &HardwareProfile::gridsynth_b)
        .def_readwrite("code_cycle_us", &HardwareProfile::code_cycle_us)
        .def_readwrite("code_distance", &HardwareProfile::code_distance)
        .def_readwrite("raw_bell_rate_hz", &HardwareProfile::raw_bell_rate_hz)
        .def_readwrite("distillation_yield", &HardwareProfile::distillation_yield)
        .def_readwrite("t_states_per_node_per_cycle",
                       &HardwareProfile::t_states_per_node_per_cycle)
        .def("logical_entanglement_rate_hz", &HardwareProfile::logical_entanglement_rate_hz);

    m.def("network_penalty", &network_penalty);
    m.def("validate_profile", [](const HardwareProfile& hw) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& finding : validate_profile(hw))
            out.emplace_back(
                finding.severity == ProfileFinding::Severity::violation ? "violation" : "warning",
                finding.message);
        return out;
    });

    py::class_<QFlyTopology>(m, "QFlyTopology")
        .def(py::init<>())
        .def_readwrite("num_groups", &QFlyTopology::num_groups)
        .def_readwrite("nodes_per_group", &QFlyTopology::nodes_per_group)
        .def_readwrite("offsets", &QFlyTopology::offsets)
        .def_readwrite("logical_compute_per_node", &QFlyTopology::logical_compute_per_node)
        .def("duplex_offsets", &QFlyTopology::duplex_offsets)
        .def("total_logical_compute", &QFlyTopology::total_logical_compute);

    m.def("build_topology", &build_topology, py::arg("num_groups"), py::arg("nodes_per_group"),
          py::arg("offsets"));
    m.def("diameter", &diameter);
    m.def("route", [](const QFlyTopology& topo, int src, int dst) {
        return route(topo, src, dst).groups;
    });
    m.def("switch_ports", &switch_ports);
    m.def(
        "broadcast_rounds",
        [](const QFlyTopology& topo, const std::string& mode, int root) {
            const auto schedule = broadcast_rounds(topo, broadcast_mode(mode), root);
            std::vector<std::vector<std::pair<int, int>>> rounds;
            for (const auto& round : schedule.rounds) rounds.push_back(round.sends);
            return rounds;
        },
        py::arg("topology"), py::arg("mode") = "source_limited", py::arg("root") = 0);
    m.def("analytic_broadcast_cost",
          [](const QFlyTopology& topo) { return analytic_broadcast_cost(topo); });

    py::class_<SubroutineCost>(m, "SubroutineCost")
        .def_readonly("name", &SubroutineCost::name)
        .def_readonly("cost", &SubroutineCost::cost)
        .def_readonly("toffoli_count", &SubroutineCost::toffoli_count)
        .def_readonly("bell_slope", &SubroutineCost::bell_slope)
        .def_readonly("notes", &SubroutineCost::notes)
        .def("__repr__", [](const SubroutineCost& s) {
            return "SubroutineCost(" + s.name + ": " + s.cost.to_string() + ")";
        });

    m.def(
        "gidney_adder",
        [](int n, const Rational& r, const HardwareProfile& hw) {
            return gidney_adder(n, ratio(r), hw);
        },
        py::arg("n_bits"), py::arg("r"), py::arg("hw") = HardwareProfile{});
    m.def(
        "qcla_adder",
        [](int n, const Rational& r, const HardwareProfile& hw) {
            return qcla_adder(n, ratio(r), hw);
        },
        py::arg("n_bits"), py::arg("r"), py::arg("hw") = HardwareProfile{});
    m.def(
        "gridsynth_rotation",
        [](int m_bits, const HardwareProfile& hw) { return gridsynth_rotation(m_bits, hw); },
        py::arg("precision_m"), py::arg("hw") = HardwareProfile{});
    m.def(
        "gridsynth_cycles",
        [](int m_bits, const HardwareProfile& hw) { return gridsynth_cycles(m_bits, hw); },
        py::arg("precision_m"), py::arg("hw") = HardwareProfile{});
    m.def(
        "phase_gradient_rotation",
        [](int m_bits, const Rational& r, const HardwareProfile& hw) {
            return phase_gradient_rotation(m_bits, ratio(r), hw);
        },
        py::arg("precision_m"), py::arg("r"), py::arg("hw") = HardwareProfile{});
    m.def(
        "rotation_crossover",
        [](const Rational& r, const Rational& t_bell, const HardwareProfile& hw) {
            return rotation_crossover(ratio(r), t_bell, hw);
        },
        py::arg("r"), py::arg("t_bell"), py::arg("hw") = HardwareProfile{});
    m.def(
        "linear_phasing",
        [](int m_bits, const Rational& r, const HardwareProfile& hw, bool prepared) {
            return linear_phasing(m_bits, ratio(r), hw, prepared);
        },
        py::arg("precision_m"), py::arg("r"), py::arg("hw") = HardwareProfile{},
        py::arg("custom_gradient_prepared") = true);
    m.def(
        "ccr_tacu",
        [](const Rational& r, const HardwareProfile& hw, const SubroutineCost& rotation) {
            return ccr_tacu(ratio(r), hw, rotation);
        },
        py::arg("r"), py::arg("hw"), py::arg("rotation"));
    m.def("local_mct", &local_mct, py::arg("num_controls"));
    m.def(
        "fan_out",
        [](const std::string& kind, int targets, const HardwareProfile& hw, int offsets) {
            return fan_out(fan_out_kind(kind), targets, hw, offsets);
        },
        py::arg("kind"), py::arg("num_targets"), py::arg("hw") = HardwareProfile{},
        py::arg("num_offsets") = 6);
    m.def(
        "dicke_unitary",
        [](int k, int m_bits, const Rational& r, const HardwareProfile& hw, bool doubled) {
            return dicke_unitary(k, m_bits, ratio(r), hw, doubled);
        },
        py::arg("weight_k"), py::arg("precision_m"), py::arg("r"),
        py::arg("hw") = HardwareProfile{}, py::arg("double_rotation") = false);

    py::class_<QAOAInstance>(m, "QAOAInstance")
        .def(py::init<>())
        .def_readwrite("n_vars", &QAOAInstance::n_vars)
        .def_readwrite("clause_ratio", &QAOAInstance::clause_ratio)
        .def_readwrite("precision_m", &QAOAInstance::precision_m)
        .def_readwrite("p_iterations", &QAOAInstance::p_iterations)
        .def_readwrite("vars_per_node", &QAOAInstance::vars_per_node)
        .def_readwrite("clause_width", &QAOAInstance::clause_width)
        .def("n_clauses", &QAOAInstance::n_clauses);

    py::class_<DQIInstance>(m, "DQIInstance")
        .def(py::init<>())
        .def_readwrite("n_vars", &DQIInstance::n_vars)
        .def_readwrite("m_clauses", &DQIInstance::m_clauses)
        .def_readwrite("weight_l", &DQIInstance::weight_l)
        .def_readwrite("precision_m", &DQIInstance::precision_m)
        .def_readwrite("clause_qubits_per_node", &DQIInstance::clause_qubits_per_node);

    py::class_<StageReport>(m, "StageReport")
        .def_readonly("stage", &StageReport::stage)
        .def_readonly("display", &StageReport::display)
        .def_readonly("formula", &StageReport::formula)
        .def_readonly("cost", &StageReport::cost)
        .def_readonly("bell_slope", &StageReport::bell_slope)
        .def_readonly("notes", &StageReport::notes)
        .def("cycles_at", &StageReport::cycles_at)
        .def("__repr__", [](const StageReport& s) {
            return "StageReport(" + s.stage + ": " + s.formula + ")";
        });

    py::class_<AlgorithmReport>(m, "AlgorithmReport")
        .def_readonly("algorithm", &AlgorithmReport::algorithm)
        .def_readonly("stages", &AlgorithmReport::stages)
        .def_readonly("total", &AlgorithmReport::total);

    m.def("qaoa_fanout_stage", &qaoa_fanout_stage, py::arg("instance"), py::arg("topology"),
          py::arg("hw"));
    m.def("qaoa_clause_stage", &qaoa_clause_stage, py::arg("instance"), py::arg("hw"));
    m.def("qaoa_mixer_stage", &qaoa_mixer_stage, py::arg("instance"), py::arg("hw"));
    m.def(
        "qaoa_iteration",
        [](const QAOAInstance& inst, const QFlyTopology& topo, const HardwareProfile& hw) {
            return qaoa_iteration(inst, topo, hw);
        },
        py::arg("instance") = QAOAInstance{}, py::arg("topology") = QFlyTopology{},
        py::arg("hw") = HardwareProfile{});
    m.def("dqi_setup_unary_stage", &dqi_setup_unary_stage, py::arg("instance"), py::arg("hw"));
    m.def("dqi_dicke_stage", &dqi_dicke_stage, py::arg("instance"), py::arg("hw"));
    m.def("dqi_constraint_stage", &dqi_constraint_stage, py::arg("instance"), py::arg("hw"));
    m.def("dqi_decode_stage", &dqi_decode_stage, py::arg("instance"), py::arg("hw"));
    m.def("dqi_hadamard_stage", &dqi_hadamard_stage, py::arg("instance"), py::arg("hw"));
    m.def(
        "dqi_total",
        [](const DQIInstance& inst, const HardwareProfile& hw) { return dqi_total(inst, hw); },
        py::arg("instance") = DQIInstance{}, py::arg("hw") = HardwareProfile{});

    py::class_<AVScenario>(m, "AVScenario")
        .def(py::init<>())
        .def_readwrite("label", &AVScenario::label)
        .def_readwrite("t_bell", &AVScenario::t_bell)
        .def_readwrite("blocks_per_cycle", &AVScenario::blocks_per_cycle)
        .def_readwrite("block_table", &AVScenario::block_table);

    py::class_<AVStageTime>(m, "AVStageTime")
        .def_readonly("stage", &AVStageTime::stage)
        .def_readonly("blocks", &AVStageTime::blocks)
        .def_readonly("cycles", &AVStageTime::cycles);

    py::class_<AVTable>(m, "AVTable")
        .def_readonly("algorithm", &AVTable::algorithm)
        .def_readonly("stages", &AVTable::stages)
        .def_readonly("total_blocks", &AVTable::total_blocks)
        .def_readonly("total_cycles", &AVTable::total_cycles);

    m.def("default_av2_scenario", &default_av2_scenario);
    m.def("default_av10_scenario", &default_av10_scenario);
    m.def("av_time", &av_time, py::arg("blocks"), py::arg("scenario"));
    m.def("av_stage_table", &av_stage_table, py::arg("scenario"), py::arg("algorithm"));
    m.def("av_scale_scenario", &av_scale_scenario, py::arg("scenario"), py::arg("multiplier"));
    m.def("load_av_scenario", &load_av_scenario, py::arg("path"));

    py::class_<pipesim::PipelineCheck>(m, "PipelineCheck")
        .def_readonly("t_bell", &pipesim::PipelineCheck::t_bell)
        .def_readonly("simulated_makespan", &pipesim::PipelineCheck::simulated_makespan)
        .def_readonly("startup", &pipesim::PipelineCheck::startup)
        .def_readonly("per_round_simulated", &pipesim::PipelineCheck::per_round_simulated)
        .def_readonly("per_round_analytic", &pipesim::PipelineCheck::per_round_analytic)
        .def_readonly("slack", &pipesim::PipelineCheck::slack)
        .def_readonly("consistent", &pipesim::PipelineCheck::consistent);

    m.def(
        "validate_pipeline",
        [](const QAOAInstance& inst, const HardwareProfile& hw,
           const std::vector<Rational>& t_points) {
            return pipesim::validate_analytic(inst, hw, t_points);
        },
        py::arg("instance") = QAOAInstance{}, py::arg("hw") = HardwareProfile{},
        py::arg("t_points") = std::vector<Rational>{Rational{2}, Rational{5}, Rational{10}});
    m.def(
        "clause_pipeline_makespan",
        [](const QAOAInstance& inst, const HardwareProfile& hw, const Rational& t_bell,
           int rounds) {
            const auto dag = pipesim::build_clause_pipeline(inst, hw, t_bell, rounds);
            return pipesim::simulate(dag, pipesim::clause_pipeline_pools()).makespan;
        },
        py::arg("instance"), py::arg("hw"), py::arg("t_bell"), py::arg("rounds"));

    m.def("table_markdown", [](const std::optional<std::string>& config_path) {
        return render_table_markdown(build_resource_table(load_run_config(config_path)));
    },
          py::arg("config_path") = std::nullopt);
    m.def("reference_check", [](const std::optional<std::string>& config_path) {
        const auto result = check_against_reference(
            build_resource_table(load_run_config(config_path)));
        return std::make_pair(result.cells_checked, result.mismatches);
    },
          py::arg("config_path") = std::nullopt);
}
