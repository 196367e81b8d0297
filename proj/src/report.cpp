#include "qfre/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace qfre {

namespace {

using nlohmann::json;

std::string t_column_name(const Rational& t) { return "t=" + to_string(t); }

TableRow stage_row(const std::string& algo, const std::string& section, const StageReport& stage,
                   const std::vector<Rational>& t_points, bool is_total) {
    TableRow row;
    row.section = section;
    row.key = algo + "." + (is_total ? "total" : stage.stage);
    row.display = stage.display;
    row.formula = stage.formula;
    row.is_total = is_total;
    row.bell_slope = stage.bell_slope;
    for (const auto& t : t_points) {
        row.exact.push_back(stage.cost.eval(t).value);
        row.cycles.push_back(stage.cycles_at(t));
    }
    return row;
}

TableRow subroutine_row(const std::string& section, const std::string& key,
                        const std::string& display, const SubroutineCost& sub,
                        const std::vector<Rational>& t_points) {
    TableRow row;
    row.section = section;
    row.key = key;
    row.display = display;
    row.formula = sub.cost.to_string();
    row.bell_slope = sub.bell_slope;
    row.toffoli_count = sub.toffoli_count;
    for (const auto& t : t_points) {
        row.exact.push_back(sub.cost.eval(t).value);
        row.cycles.push_back(sub.cost.eval_rounded(t));
    }
    return row;
}

void attach_av(TableRow& row, const AVScenario& av2, const AVScenario& av10) {
    auto lookup = [&](const AVScenario& sc) -> std::optional<std::int64_t> {
        auto it = sc.block_table.find(row.key);
        if (it == sc.block_table.end()) return std::nullopt;
        return av_time(it->second, sc);
    };
    row.av2 = lookup(av2);
    row.av10 = lookup(av10);
}

void attach_av_total(TableRow& row, const std::string& algo, const AVScenario& av2,
                     const AVScenario& av10) {
    row.av2 = av_stage_table(av2, algo).total_cycles;
    row.av10 = av_stage_table(av10, algo).total_cycles;
}

}  // namespace

std::string format_with_commas(std::int64_t value) {
    std::string digits = std::to_string(value);
    std::string out;
    int count = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (count && count % 3 == 0 && std::isdigit(static_cast<unsigned char>(*it))) out += ',';
        out += *it;
        ++count;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

ResourceTable build_resource_table(const RunConfig& config) {
    const auto& hw = config.hardware;
    ResourceTable table;
    table.t_points = config.t_bell_points;
    table.has_av = config.default_eval_points();

    // core subroutines at the reference parameters
    const std::string core = "Core Subroutines";
    const int adder_bits = config.qaoa.precision_m;
    TableRow gidney = subroutine_row(
        core, "core.gidney_adder", "Gidney Adder (" + std::to_string(adder_bits) + "-bit)",
        gidney_adder(adder_bits, RoutingRatio::sparse(), hw), table.t_points);
    TableRow qcla = subroutine_row(
        core, "core.qcla_adder", "QCLA (Sklansky, " + std::to_string(adder_bits) + "-bit)",
        qcla_adder(adder_bits, RoutingRatio::qcla(), hw), table.t_points);
    TableRow grid = subroutine_row(
        core, "core.gridsynth_rotation",
        "Gridsynth Rotation (" + std::to_string(config.qaoa.precision_m) + "-bit)",
        gridsynth_rotation(config.qaoa.precision_m, hw), table.t_points);
    TableRow dicke = subroutine_row(
        core, "core.dicke_unitary",
        "Dicke State Unitary (k=" + std::to_string(config.dqi.weight_l) + ", " +
            std::to_string(config.dqi.precision_m) + "-bit phasing)",
        dicke_unitary(config.dqi.weight_l, config.dqi.precision_m, RoutingRatio::sparse(), hw),
        table.t_points);

    AlgorithmReport qaoa = qaoa_iteration(config.qaoa, config.topology, hw);
    AlgorithmReport dqi = dqi_total(config.dqi, hw);

    const std::string qaoa_section = "QAOA Iteration Stages (8-SAT, n=" +
                                     std::to_string(config.qaoa.n_vars) + ", m=" +
                                     format_with_commas(round_to_i64(config.qaoa.n_clauses())) +
                                     ")";
    const std::string dqi_section =
        "DQI Execution Stages (n=" + std::to_string(config.dqi.n_vars) + ", m=" +
        std::to_string(config.dqi.m_clauses) + ", l=" + std::to_string(config.dqi.weight_l) + ")";

    std::vector<TableRow> rows;
    rows.push_back(std::move(gidney));
    rows.push_back(std::move(qcla));
    rows.push_back(std::move(grid));
    rows.push_back(std::move(dicke));
    for (const auto& stage : qaoa.stages)
        rows.push_back(stage_row("qaoa", qaoa_section, stage, table.t_points, false));
    rows.push_back(stage_row("qaoa", qaoa_section, qaoa.total, table.t_points, true));
    for (const auto& stage : dqi.stages) {
        if (stage.stage == stage_key::dqi_hadamard) continue;  // not a reference-table row
        rows.push_back(stage_row("dqi", dqi_section, stage, table.t_points, false));
    }
    rows.push_back(stage_row("dqi", dqi_section, dqi.total, table.t_points, true));

    if (table.has_av) {
        for (auto& row : rows) {
            if (row.key == "qaoa.total") attach_av_total(row, "qaoa", config.av2, config.av10);
            else if (row.key == "dqi.total") attach_av_total(row, "dqi", config.av2, config.av10);
            else attach_av(row, config.av2, config.av10);
        }
    }
    table.rows = std::move(rows);
    return table;
}

std::string render_table_markdown(const ResourceTable& table) {
    std::ostringstream os;
    os << "| Subroutine / Algorithm Stage | Analytical Formula (logical cycles) |";
    if (table.has_av) {
        os << " AV_2 | T_Bell = 2 | T_Bell = 5 | AV_10 | T_Bell = 10 |\n";
        os << "|---|---|---:|---:|---:|---:|---:|\n";
    } else {
        for (const auto& t : table.t_points) os << " T_Bell = " << to_string(t) << " |";
        os << "\n|---|---|";
        for (std::size_t i = 0; i < table.t_points.size(); ++i) os << "---:|";
        os << "\n";
    }
    std::string section;
    auto cell = [](const std::optional<std::int64_t>& v) {
        return v ? format_with_commas(*v) : std::string("---");
    };
    for (const auto& row : table.rows) {
        if (row.section != section) {
            section = row.section;
            os << "| **" << section << "** |";
            const std::size_t cols = table.has_av ? 6 : table.t_points.size() + 1;
            for (std::size_t i = 0; i < cols; ++i) os << " |";
            os << "\n";
        }
        os << "| " << (row.is_total ? "*" + row.display + "*" : row.display) << " | `"
           << row.formula << "` |";
        if (table.has_av) {
            os << " " << cell(row.av2) << " | " << format_with_commas(row.cycles[0]) << " | "
               << format_with_commas(row.cycles[1]) << " | " << cell(row.av10) << " | "
               << format_with_commas(row.cycles[2]) << " |";
        } else {
            for (auto c : row.cycles) os << " " << format_with_commas(c) << " |";
        }
        os << "\n";
    }
    return os.str();
}

std::string render_table_csv(const ResourceTable& table) {
    std::ostringstream os;
    os << "key,display,formula";
    if (table.has_av) os << ",AV2";
    for (const auto& t : table.t_points) os << "," << t_column_name(t);
    if (table.has_av) os << ",AV10";
    os << "\n";
    for (const auto& row : table.rows) {
        os << row.key << ",\"" << row.display << "\",\"" << row.formula << "\"";
        if (table.has_av) os << "," << (row.av2 ? std::to_string(*row.av2) : "");
        for (auto c : row.cycles) os << "," << c;
        if (table.has_av) os << "," << (row.av10 ? std::to_string(*row.av10) : "");
        os << "\n";
    }
    return os.str();
}

std::string render_table_json(const ResourceTable& table) {
    json doc;
    doc["schema_version"] = 1;
    doc["t_bell_points"] = json::array();
    for (const auto& t : table.t_points) doc["t_bell_points"].push_back(to_string(t));
    doc["rows"] = json::array();
    for (const auto& row : table.rows) {
        json r;
        r["key"] = row.key;
        r["section"] = row.section;
        r["display"] = row.display;
        r["formula"] = row.formula;
        r["is_total"] = row.is_total;
        r["bell_slope"] = to_string(row.bell_slope);
        if (row.toffoli_count) r["toffoli_count"] = *row.toffoli_count;
        json cells = json::object();
        for (std::size_t i = 0; i < table.t_points.size(); ++i) {
            cells[t_column_name(table.t_points[i])] = {
                {"cycles", row.cycles[i]},
                {"exact", to_string(row.exact[i])},
                {"formula", row.formula},
            };
        }
        if (row.av2) cells["AV2"] = {{"cycles", *row.av2}, {"formula", row.formula}};
        if (row.av10) cells["AV10"] = {{"cycles", *row.av10}, {"formula", row.formula}};
        r["cells"] = std::move(cells);
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string render_report_markdown(const AlgorithmReport& report,
                                   const std::vector<Rational>& t_points) {
    std::ostringstream os;
    os << "## " << report.algorithm << "\n\n";
    os << "| Stage | Formula (logical cycles) |";
    for (const auto& t : t_points) os << " T_Bell = " << to_string(t) << " |";
    os << " Bell slope | Notes |\n|---|---|";
    for (std::size_t i = 0; i < t_points.size(); ++i) os << "---:|";
    os << "---:|---|\n";
    auto emit = [&](const StageReport& stage, bool is_total) {
        os << "| " << (is_total ? "*" + stage.display + "*" : stage.display) << " | `"
           << stage.formula << "` |";
        for (const auto& t : t_points) os << " " << format_with_commas(stage.cycles_at(t)) << " |";
        os << " " << to_string(stage.bell_slope) << " | " << stage.notes << " |\n";
    };
    for (const auto& stage : report.stages) emit(stage, false);
    emit(report.total, true);
    return os.str();
}

std::string render_report_csv(const AlgorithmReport& report,
                              const std::vector<Rational>& t_points) {
    std::ostringstream os;
    os << "stage,formula";
    for (const auto& t : t_points) os << "," << t_column_name(t);
    os << ",bell_slope\n";
    auto emit = [&](const StageReport& stage) {
        os << stage.stage << ",\"" << stage.formula << "\"";
        for (const auto& t : t_points) os << "," << stage.cycles_at(t);
        os << "," << to_string(stage.bell_slope) << "\n";
    };
    for (const auto& stage : report.stages) emit(stage);
    emit(report.total);
    return os.str();
}

std::string render_report_json(const AlgorithmReport& report,
                               const std::vector<Rational>& t_points) {
    json doc;
    doc["schema_version"] = 1;
    doc["algorithm"] = report.algorithm;
    auto stage_json = [&](const StageReport& stage) {
        json s;
        s["stage"] = stage.stage;
        s["display"] = stage.display;
        s["formula"] = stage.formula;
        s["bell_slope"] = to_string(stage.bell_slope);
        s["notes"] = stage.notes;
        json cells = json::object();
        for (const auto& t : t_points) {
            cells[t_column_name(t)] = {
                {"cycles", stage.cycles_at(t)},
                {"exact", to_string(stage.cost.eval(t).value)},
                {"formula", stage.formula},
            };
        }
        s["cells"] = std::move(cells);
        return s;
    };
    doc["stages"] = json::array();
    for (const auto& stage : report.stages) doc["stages"].push_back(stage_json(stage));
    doc["total"] = stage_json(report.total);
    return doc.dump(2) + "\n";
}

const std::map<std::pair<std::string, std::string>, std::int64_t>& reference_table_cells() {
    static const std::map<std::pair<std::string, std::string>, std::int64_t> cells = {
        {{"core.gidney_adder", "AV2"}, 19},
        {{"core.gidney_adder", "t=2"}, 294},
        {{"core.gidney_adder", "t=5"}, 357},
        {{"core.gidney_adder", "AV10"}, 94},
        {{"core.gidney_adder", "t=10"}, 462},
        {{"core.qcla_adder", "t=2"}, 60},
        {{"core.qcla_adder", "t=5"}, 90},
        {{"core.qcla_adder", "t=10"}, 140},
        {{"core.gridsynth_rotation", "AV2"}, 32},
        {{"core.gridsynth_rotation", "t=2"}, 201},
        {{"core.gridsynth_rotation", "t=5"}, 201},
        {{"core.gridsynth_rotation", "AV10"}, 156},
        {{"core.gridsynth_rotation", "t=10"}, 201},
        {{"core.dicke_unitary", "t=2"}, 341792},
        {{"core.dicke_unitary", "t=5"}, 345042},
        {{"core.dicke_unitary", "t=10"}, 350458},
        {{"qaoa.fanout", "t=2"}, 158},
        {{"qaoa.fanout", "t=5"}, 395},
        {{"qaoa.fanout", "t=10"}, 790},
        {{"qaoa.clause_evaluation", "AV2"}, 396294},
        {{"qaoa.clause_evaluation", "t=2"}, 38896},
        {{"qaoa.clause_evaluation", "t=5"}, 41536},
        {{"qaoa.clause_evaluation", "AV10"}, 1936410},
        {{"qaoa.clause_evaluation", "t=10"}, 47696},
        {{"qaoa.mixer_rotations", "AV2"}, 2048},
        {{"qaoa.mixer_rotations", "t=2"}, 201},
        {{"qaoa.mixer_rotations", "t=5"}, 201},
        {{"qaoa.mixer_rotations", "AV10"}, 9984},
        {{"qaoa.mixer_rotations", "t=10"}, 201},
        {{"qaoa.total", "AV2"}, 398342},
        {{"qaoa.total", "t=2"}, 39255},
        {{"qaoa.total", "t=5"}, 42132},
        {{"qaoa.total", "AV10"}, 1946394},
        {{"qaoa.total", "t=10"}, 48687},
        {{"dqi.setup_unary", "AV2"}, 1633},
        {{"dqi.setup_unary", "t=2"}, 1737},
        {{"dqi.setup_unary", "t=5"}, 2601},
        {{"dqi.setup_unary", "AV10"}, 7962},
        {{"dqi.setup_unary", "t=10"}, 4041},
        {{"dqi.dicke_preparation", "AV2"}, 873077},
        {{"dqi.dicke_preparation", "t=2"}, 341792},
        {{"dqi.dicke_preparation", "t=5"}, 345042},
        {{"dqi.dicke_preparation", "AV10"}, 4256369},
        {{"dqi.dicke_preparation", "t=10"}, 350458},
        {{"dqi.constraint_encoding", "AV2"}, 208},
        {{"dqi.constraint_encoding", "t=2"}, 800},
        {{"dqi.constraint_encoding", "t=5"}, 2000},
        {{"dqi.constraint_encoding", "AV10"}, 1042},
        {{"dqi.constraint_encoding", "t=10"}, 4000},
        {{"dqi.syndrome_decoding", "AV2"}, 208},
        {{"dqi.syndrome_decoding", "t=2"}, 5100},
        {{"dqi.syndrome_decoding", "t=5"}, 12750},
        {{"dqi.syndrome_decoding", "AV10"}, 1042},
        {{"dqi.syndrome_decoding", "t=10"}, 25500},
        {{"dqi.total", "AV2"}, 875126},
        {{"dqi.total", "t=2"}, 349429},
        {{"dqi.total", "t=5"}, 362393},
        {{"dqi.total", "AV10"}, 4266415},
        {{"dqi.total", "t=10"}, 383999},
    };
    return cells;
}

CheckResult check_against_reference(const ResourceTable& table) {
    if (!table.has_av)
        throw std::invalid_argument(
            "check requires the canonical evaluation points {2, 5, 10}");
    std::map<std::pair<std::string, std::string>, std::int64_t> actual;
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < table.t_points.size(); ++i)
            actual[{row.key, t_column_name(table.t_points[i])}] = row.cycles[i];
        if (row.av2) actual[{row.key, "AV2"}] = *row.av2;
        if (row.av10) actual[{row.key, "AV10"}] = *row.av10;
    }
    CheckResult result;
    for (const auto& [where, expected] : reference_table_cells()) {
        ++result.cells_checked;
        auto it = actual.find(where);
        if (it == actual.end()) {
            result.mismatches.push_back(where.first + " [" + where.second + "]: missing");
        } else if (it->second != expected) {
            result.mismatches.push_back(where.first + " [" + where.second + "]: expected " +
                                        std::to_string(expected) + ", got " +
                                        std::to_string(it->second));
        }
    }
    return result;
}

}  // namespace qfre
