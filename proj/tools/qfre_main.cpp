#include "qfre/config.hpp"
#include "qfre/pipesim.hpp"
#include "qfre/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace qfre;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMismatch = 3;

struct GlobalOptions {
    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<std::vector<std::string>> t_bell;
};

RunConfig make_run_config(const GlobalOptions& opts) {
    RunConfig run = load_run_config(opts.config_path);
    if (opts.format) run.format = parse_output_format(*opts.format);
    if (opts.t_bell) {
        std::vector<Rational> points;
        for (const auto& item : *opts.t_bell)
            points.push_back(parse_rational_or_throw(item, "--t-bell"));
        if (points.empty()) throw std::invalid_argument("--t-bell: empty list");
        for (const auto& t : points)
            if (!run.hardware.t_bell_domain.contains(t))
                throw std::invalid_argument("--t-bell: " + to_string(t) +
                                            " outside the cost domain");
        run.t_bell_points = std::move(points);
    }
    return run;
}

int cmd_table(const GlobalOptions& opts, bool check) {
    RunConfig run = make_run_config(opts);
    const ResourceTable table = build_resource_table(run);
    switch (run.format) {
        case OutputFormat::markdown: std::cout << render_table_markdown(table); break;
        case OutputFormat::csv: std::cout << render_table_csv(table); break;
        case OutputFormat::json: std::cout << render_table_json(table); break;
    }
    if (check) {
        if (!table.has_av) {
            std::cerr << "table --check requires the canonical evaluation points {2, 5, 10}\n";
            return kExitUsage;
        }
        const CheckResult result = check_against_reference(table);
        if (!result.ok()) {
            std::cerr << "reference check failed (" << result.mismatches.size() << " of "
                      << result.cells_checked << " cells):\n";
            for (const auto& m : result.mismatches) std::cerr << "  " << m << "\n";
            return kExitMismatch;
        }
        std::cerr << "reference check passed: " << result.cells_checked << " cells\n";
    }
    return kExitOk;
}

int cmd_estimate(const GlobalOptions& opts, const std::string& algorithm) {
    RunConfig run = make_run_config(opts);
    AlgorithmReport report = algorithm == "qaoa"
                                 ? qaoa_iteration(run.qaoa, run.topology, run.hardware)
                                 : dqi_total(run.dqi, run.hardware);
    report.evaluate_at(run.t_bell_points);
    switch (run.format) {
        case OutputFormat::markdown:
            std::cout << render_report_markdown(report, run.t_bell_points);
            break;
        case OutputFormat::csv: std::cout << render_report_csv(report, run.t_bell_points); break;
        case OutputFormat::json:
            std::cout << render_report_json(report, run.t_bell_points);
            break;
    }
    return kExitOk;
}

int cmd_sweep(const GlobalOptions& opts, const std::string& algorithm, const std::string& from,
              const std::string& to, const std::string& step) {
    RunConfig run = make_run_config(opts);
    const Rational lo = parse_rational_or_throw(from, "--from");
    const Rational hi = parse_rational_or_throw(to, "--to");
    const Rational inc = parse_rational_or_throw(step, "--step");
    if (inc <= 0) throw std::invalid_argument("sweep: step must be positive");
    if (lo > hi) throw std::invalid_argument("sweep: empty range");
    if (!run.hardware.t_bell_domain.contains(lo) || !run.hardware.t_bell_domain.contains(hi))
        throw std::invalid_argument("sweep: range outside the cost domain");

    std::vector<std::pair<std::string, AlgorithmReport>> reports;
    if (algorithm == "qaoa" || algorithm == "all")
        reports.emplace_back("qaoa", qaoa_iteration(run.qaoa, run.topology, run.hardware));
    if (algorithm == "dqi" || algorithm == "all")
        reports.emplace_back("dqi", dqi_total(run.dqi, run.hardware));

    std::vector<Rational> points;
    for (Rational t = lo; t <= hi; t += inc) points.push_back(t);

    if (run.format == OutputFormat::json) {
        json doc;
        doc["schema_version"] = 1;
        doc["rows"] = json::array();
        for (const auto& t : points) {
            json row;
            row["t_bell"] = to_string(t);
            for (const auto& [name, report] : reports) {
                for (const auto& stage : report.stages)
                    row[name + "." + stage.stage] = stage.cycles_at(t);
                row[name + ".total"] = report.total.cycles_at(t);
            }
            doc["rows"].push_back(std::move(row));
        }
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    // CSV for both remaining formats; a sweep is a plotting artifact
    std::cout << "t_bell";
    for (const auto& [name, report] : reports) {
        for (const auto& stage : report.stages) std::cout << "," << name << "." << stage.stage;
        std::cout << "," << name << ".total";
    }
    std::cout << "\n";
    for (const auto& t : points) {
        std::cout << to_string(t);
        for (const auto& [name, report] : reports) {
            for (const auto& stage : report.stages) std::cout << "," << stage.cycles_at(t);
            std::cout << "," << report.total.cycles_at(t);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_crossover(const GlobalOptions& opts, const std::string& r_text,
                  const std::string& t_text) {
    RunConfig run = make_run_config(opts);
    const RoutingRatio r{parse_rational_or_throw(r_text, "--r")};
    const Rational t = parse_rational_or_throw(t_text, "--t-bell");
    const int m_star = rotation_crossover(r, t, run.hardware);

    auto sides = [&](int m) {
        const Rational lhs =
            Rational{ceil_log2(m) + kQclaExtraLayers} * (Rational{run.hardware.t_toff} + r.value * t);
        const Rational rhs = gridsynth_cycles_exact(m, run.hardware);
        return std::make_pair(lhs, rhs);
    };
    json doc;
    doc["schema_version"] = 1;
    doc["r"] = to_string(r.value);
    doc["t_bell"] = to_string(t);
    doc["crossover_m"] = m_star;
    for (int m : {m_star - 1, m_star}) {
        if (m < 1) continue;
        auto [lhs, rhs] = sides(m);
        doc["curves"]["m=" + std::to_string(m)] = {
            {"phase_gradient_qcla", to_string(lhs)},
            {"gridsynth", to_string(rhs)},
            {"phase_gradient_wins", lhs < rhs},
        };
    }
    if (run.format == OutputFormat::json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "crossover precision m = " << m_star << " (r = " << to_string(r.value)
                  << ", T_Bell = " << to_string(t) << ")\n";
        for (int m : {m_star - 1, m_star}) {
            if (m < 1) continue;
            auto [lhs, rhs] = sides(m);
            std::cout << "  m = " << m << ": QCLA phase gradient " << to_string(lhs)
                      << (lhs < rhs ? " < " : " >= ") << "gridsynth " << to_string(rhs) << "\n";
        }
    }
    return kExitOk;
}

json schedule_to_json(const BroadcastSchedule& schedule) {
    json rounds = json::array();
    for (const auto& round : schedule.rounds) {
        json sends = json::array();
        for (const auto& [src, dst] : round.sends) sends.push_back({{"src", src}, {"dst", dst}});
        rounds.push_back(std::move(sends));
    }
    return {{"root", schedule.root},
            {"mode", schedule.mode == BroadcastMode::source_limited ? "source_limited" : "relaying"},
            {"num_rounds", schedule.num_rounds()},
            {"rounds", std::move(rounds)}};
}

int cmd_topology(const GlobalOptions& opts) {
    RunConfig run = make_run_config(opts);
    const auto& topo = run.topology;
    const auto source_limited = broadcast_rounds(topo, BroadcastMode::source_limited);
    const auto relaying = broadcast_rounds(topo, BroadcastMode::relaying);

    if (run.format == OutputFormat::json) {
        json doc;
        doc["schema_version"] = 1;
        doc["num_groups"] = topo.num_groups;
        doc["nodes_per_group"] = topo.nodes_per_group;
        doc["offsets"] = topo.offsets;
        doc["duplex_offsets"] = topo.duplex_offsets();
        doc["diameter"] = diameter(topo);
        doc["switch_ports"] = switch_ports(topo);
        doc["broadcast"] = {{"source_limited", schedule_to_json(source_limited)},
                            {"relaying", schedule_to_json(relaying)}};
        doc["analytic_broadcast_cost"] = analytic_broadcast_cost(topo).to_string();
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# Topology\n\n";
    std::cout << "- groups: " << topo.num_groups << " x " << topo.nodes_per_group << " nodes\n";
    std::cout << "- offsets:";
    for (int o : topo.offsets) std::cout << " " << o;
    std::cout << "\n- duplex offsets:";
    for (int o : topo.duplex_offsets()) std::cout << " " << o;
    std::cout << "\n- diameter: " << diameter(topo) << " hops\n";
    std::cout << "- switch ports: " << switch_ports(topo) << "\n";
    std::cout << "- broadcast rounds (source-limited): " << source_limited.num_rounds() << "\n";
    std::cout << "- broadcast rounds (relaying): " << relaying.num_rounds() << "\n";
    std::cout << "- analytic broadcast cost: " << analytic_broadcast_cost(topo).to_string()
              << "\n";
    auto print_schedule = [](const char* name, const BroadcastSchedule& schedule) {
        std::cout << "\n## Broadcast schedule (" << name << ", root "
                  << schedule.root << ")\n\n";
        for (int r = 0; r < schedule.num_rounds(); ++r) {
            std::cout << "- round " << r + 1 << ":";
            for (const auto& [src, dst] : schedule.rounds[r].sends)
                std::cout << " " << src << ">" << dst;
            std::cout << "\n";
        }
    };
    print_schedule("source-limited", source_limited);
    print_schedule("relaying", relaying);
    return kExitOk;
}

int cmd_validate(const GlobalOptions& opts) {
    RunConfig run = make_run_config(opts);
    const auto checks = pipesim::validate_analytic(run.qaoa, run.hardware, run.t_bell_points);
    json doc;
    doc["schema_version"] = 1;
    doc["checks"] = json::array();
    bool all_consistent = true;
    for (const auto& check : checks) {
        all_consistent = all_consistent && check.consistent;
        doc["checks"].push_back({{"t_bell", to_string(check.t_bell)},
                                 {"simulated_makespan", check.simulated_makespan},
                                 {"startup", check.startup},
                                 {"per_round_simulated", check.per_round_simulated},
                                 {"per_round_analytic", check.per_round_analytic},
                                 {"slack", check.slack},
                                 {"consistent", check.consistent}});
    }
    doc["consistent"] = all_consistent;
    std::cout << doc.dump(2) << "\n";
    return all_consistent ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical-cycle resource estimator for distributed Pauli-based computation"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::string config_path;
    std::string format;
    std::vector<std::string> t_bell;
    app.add_option("--config", config_path, "path to the run configuration file");
    app.add_option("--format", format, "output format: markdown | csv | json");
    app.add_option("--t-bell", t_bell, "evaluation points, e.g. --t-bell 2,5,10")
        ->delimiter(',');

    bool check = false;
    auto* table = app.add_subcommand("table", "reproduce the full resource table");
    table->fallthrough();
    table->add_flag("--check", check, "verify every cell against the built-in reference values");

    std::string algorithm;
    auto* estimate = app.add_subcommand("estimate", "stage-by-stage cost of one algorithm");
    estimate->fallthrough();
    estimate->add_option("algorithm", algorithm, "qaoa | dqi")
        ->required()
        ->check(CLI::IsMember({"qaoa", "dqi"}));

    std::string sweep_algo = "all", sweep_from = "2", sweep_to = "10", sweep_step = "1";
    auto* sweep = app.add_subcommand("sweep", "stage costs over a T_Bell range");
    sweep->fallthrough();
    sweep->add_option("algorithm", sweep_algo, "qaoa | dqi | all")
        ->check(CLI::IsMember({"qaoa", "dqi", "all"}));
    sweep->add_option("--from", sweep_from, "range start (default 2)");
    sweep->add_option("--to", sweep_to, "range end (default 10)");
    sweep->add_option("--step", sweep_step, "step (default 1)");

    std::string cross_r = "1", cross_t = "10";
    auto* crossover = app.add_subcommand("crossover",
                                         "precision where QCLA phasing beats gridsynth");
    crossover->fallthrough();
    crossover->add_option("--r", cross_r, "routing ratio (default 1)");
    crossover->add_option("--t-bell-at", cross_t, "T_Bell operating point (default 10)");

    auto* topology = app.add_subcommand("topology", "diameter, ports and broadcast schedules");
    topology->fallthrough();
    auto* validate = app.add_subcommand("validate",
                                        "pipeline-scheduling check of the clause-stage formula");
    validate->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (!config_path.empty()) opts.config_path = config_path;
    if (!format.empty()) opts.format = format;
    if (!t_bell.empty()) opts.t_bell = t_bell;

    try {
        if (table->parsed()) return cmd_table(opts, check);
        if (estimate->parsed()) return cmd_estimate(opts, algorithm);
        if (sweep->parsed()) return cmd_sweep(opts, sweep_algo, sweep_from, sweep_to, sweep_step);
        if (crossover->parsed()) return cmd_crossover(opts, cross_r, cross_t);
        if (topology->parsed()) return cmd_topology(opts);
        if (validate->parsed()) return cmd_validate(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitUsage;
}
