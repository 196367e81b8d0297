#include "qfre/config.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qfre {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : value) {
        if (c == ',') {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!trim(current).empty() || !parts.empty()) parts.push_back(trim(current));
    return parts;
}

int to_int(const Rational& r, const std::string& what) {
    if (denominator(r) != 1)
        throw std::invalid_argument(what + ": expected an integer, got " + to_string(r));
    return static_cast<int>(numerator(r));
}

}  // namespace

ConfigFile ConfigFile::parse(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find_first_of("#;"); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": malformed section header");
            section = trim(std::string_view(stripped).substr(1, stripped.size() - 2));
            if (section.empty())
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": empty section name");
            cfg.sections_[section];
            continue;
        }
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto sec = sections_.find(section);
    return sec != sections_.end() && sec->second.count(key) > 0;
}

std::optional<std::string> ConfigFile::get(const std::string& section,
                                           const std::string& key) const {
    auto sec = sections_.find(section);
    if (sec == sections_.end()) return std::nullopt;
    auto item = sec->second.find(key);
    if (item == sec->second.end()) return std::nullopt;
    return item->second;
}

Rational ConfigFile::get_rational(const std::string& section, const std::string& key,
                                  const Rational& fallback) const {
    auto value = get(section, key);
    if (!value) return fallback;
    return parse_rational_or_throw(*value, section + "." + key);
}

int ConfigFile::get_int(const std::string& section, const std::string& key, int fallback) const {
    auto value = get(section, key);
    if (!value) return fallback;
    return to_int(parse_rational_or_throw(*value, section + "." + key), section + "." + key);
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    auto value = get(section, key);
    return value ? *value : fallback;
}

std::vector<Rational> ConfigFile::get_rational_list(const std::string& section,
                                                    const std::string& key,
                                                    const std::vector<Rational>& fallback) const {
    auto value = get(section, key);
    if (!value) return fallback;
    std::vector<Rational> out;
    for (const auto& part : split_list(*value))
        out.push_back(parse_rational_or_throw(part, section + "." + key));
    if (out.empty())
        throw std::invalid_argument(section + "." + key + ": empty list");
    return out;
}

std::vector<int> ConfigFile::get_int_list(const std::string& section, const std::string& key,
                                          const std::vector<int>& fallback) const {
    auto value = get(section, key);
    if (!value) return fallback;
    std::vector<int> out;
    for (const auto& part : split_list(*value))
        out.push_back(to_int(parse_rational_or_throw(part, section + "." + key),
                             section + "." + key));
    if (out.empty())
        throw std::invalid_argument(section + "." + key + ": empty list");
    return out;
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "markdown") return OutputFormat::markdown;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

bool RunConfig::default_eval_points() const {
    return t_bell_points == std::vector<Rational>{Rational{2}, Rational{5}, Rational{10}};
}

HardwareProfile hardware_from_config(const ConfigFile& cfg) {
    HardwareProfile hw;
    hw.t_bell_domain.lo = cfg.get_rational("hardware", "t_bell_min", hw.t_bell_domain.lo);
    hw.t_bell_domain.hi = cfg.get_rational("hardware", "t_bell_max", hw.t_bell_domain.hi);
    hw.t_toff = cfg.get_int("hardware", "t_toff", hw.t_toff);
    hw.gridsynth_a = cfg.get_rational("hardware", "gridsynth_a", hw.gridsynth_a);
    hw.gridsynth_b = cfg.get_rational("hardware", "gridsynth_b", hw.gridsynth_b);
    hw.code_cycle_us = cfg.get_rational("hardware", "code_cycle_us", hw.code_cycle_us);
    hw.code_distance = cfg.get_int("hardware", "code_distance", hw.code_distance);
    hw.raw_bell_rate_hz = cfg.get_rational("hardware", "raw_bell_rate_hz", hw.raw_bell_rate_hz);
    hw.distillation_yield =
        cfg.get_rational("hardware", "distillation_yield", hw.distillation_yield);
    hw.t_states_per_node_per_cycle =
        cfg.get_int("hardware", "t_states_per_node_per_cycle", hw.t_states_per_node_per_cycle);
    return hw;
}

std::string hardware_to_config(const HardwareProfile& hw) {
    std::ostringstream os;
    os << "[hardware]\n";
    os << "t_bell_min = " << to_string(hw.t_bell_domain.lo) << "\n";
    os << "t_bell_max = " << to_string(hw.t_bell_domain.hi) << "\n";
    os << "t_toff = " << hw.t_toff << "\n";
    os << "gridsynth_a = " << to_string(hw.gridsynth_a) << "\n";
    os << "gridsynth_b = " << to_string(hw.gridsynth_b) << "\n";
    os << "code_cycle_us = " << to_string(hw.code_cycle_us) << "\n";
    os << "code_distance = " << hw.code_distance << "\n";
    os << "raw_bell_rate_hz = " << to_string(hw.raw_bell_rate_hz) << "\n";
    os << "distillation_yield = " << to_string(hw.distillation_yield) << "\n";
    os << "t_states_per_node_per_cycle = " << hw.t_states_per_node_per_cycle << "\n";
    return os.str();
}

AVScenario load_av_scenario(const std::string& path) {
    const ConfigFile cfg = ConfigFile::load(path);
    AVScenario sc;
    sc.label = cfg.get_string("scenario", "label", "");
    if (sc.label.empty())
        throw std::invalid_argument(path + ": scenario label is required");
    sc.t_bell = cfg.get_rational("scenario", "t_bell", Rational{0});
    if (sc.t_bell <= 0)
        throw std::invalid_argument(path + ": scenario t_bell must be positive");
    sc.blocks_per_cycle = cfg.get_rational("scenario", "blocks_per_cycle", sc.blocks_per_cycle);
    auto blocks = cfg.sections().find("blocks");
    if (blocks == cfg.sections().end() || blocks->second.empty())
        throw std::invalid_argument(path + ": [blocks] section is required");
    for (const auto& [key, value] : blocks->second) {
        Rational count = parse_rational_or_throw(value, "blocks." + key);
        if (count < 0) throw std::invalid_argument(path + ": negative block count for " + key);
        sc.block_table[key] = std::move(count);
    }
    return sc;
}

RunConfig load_run_config(const std::optional<std::string>& path) {
    RunConfig run;
    if (!path) return run;

    const ConfigFile cfg = ConfigFile::load(*path);
    run.hardware = hardware_from_config(cfg);

    run.topology = build_topology(
        cfg.get_int("topology", "num_groups", run.topology.num_groups),
        cfg.get_int("topology", "nodes_per_group", run.topology.nodes_per_group),
        cfg.get_int_list("topology", "offsets", run.topology.offsets));
    run.topology.logical_compute_per_node = cfg.get_int(
        "topology", "logical_compute_per_node", run.topology.logical_compute_per_node);
    run.topology.logical_extractor_per_node = cfg.get_int(
        "topology", "logical_extractor_per_node", run.topology.logical_extractor_per_node);
    run.topology.physical_per_node =
        cfg.get_int("topology", "physical_per_node", run.topology.physical_per_node);

    run.qaoa.n_vars = cfg.get_int("qaoa", "n_vars", run.qaoa.n_vars);
    run.qaoa.clause_ratio = cfg.get_rational("qaoa", "clause_ratio", run.qaoa.clause_ratio);
    run.qaoa.precision_m = cfg.get_int("qaoa", "precision_m", run.qaoa.precision_m);
    run.qaoa.p_iterations = cfg.get_int("qaoa", "p_iterations", run.qaoa.p_iterations);
    run.qaoa.vars_per_node = cfg.get_int("qaoa", "vars_per_node", run.qaoa.vars_per_node);
    run.qaoa.clause_width = cfg.get_int("qaoa", "clause_width", run.qaoa.clause_width);

    run.dqi.n_vars = cfg.get_int("dqi", "n_vars", run.dqi.n_vars);
    run.dqi.m_clauses = cfg.get_int("dqi", "m_clauses", run.dqi.m_clauses);
    run.dqi.weight_l = cfg.get_int("dqi", "weight_l", run.dqi.weight_l);
    run.dqi.precision_m = cfg.get_int("dqi", "precision_m", run.dqi.precision_m);
    run.dqi.clause_qubits_per_node =
        cfg.get_int("dqi", "clause_qubits_per_node", run.dqi.clause_qubits_per_node);
    if (run.dqi.clause_qubits_per_node > run.topology.logical_compute_per_node)
        throw std::invalid_argument(
            "dqi.clause_qubits_per_node exceeds topology.logical_compute_per_node");

    run.t_bell_points = cfg.get_rational_list("report", "t_bell_points", run.t_bell_points);
    for (const auto& t : run.t_bell_points)
        if (!run.hardware.t_bell_domain.contains(t))
            throw std::invalid_argument("report.t_bell_points: " + to_string(t) +
                                        " outside the cost domain");
    run.format = parse_output_format(cfg.get_string("report", "format", "markdown"));

    const auto base = std::filesystem::path(*path).parent_path();
    auto resolve = [&](const std::string& rel) {
        std::filesystem::path p(rel);
        return (p.is_absolute() ? p : base / p).string();
    };
    if (auto av2 = cfg.get("report", "av2_scenario")) {
        if (!std::filesystem::exists(resolve(*av2)))
            throw std::runtime_error("AV scenario file not found: " + resolve(*av2));
        run.av2 = load_av_scenario(resolve(*av2));
    }
    if (auto av10 = cfg.get("report", "av10_scenario")) {
        if (!std::filesystem::exists(resolve(*av10)))
            throw std::runtime_error("AV scenario file not found: " + resolve(*av10));
        run.av10 = load_av_scenario(resolve(*av10));
    }
    return run;
}

}  // namespace qfre
