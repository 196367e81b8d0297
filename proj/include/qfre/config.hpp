#pragma once

#include "qfre/algorithms.hpp"
#include "qfre/baseline_av.hpp"
#include "qfre/hardware.hpp"
#include "qfre/rational.hpp"
#include "qfre/topology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qfre {

// Flat sectioned key = value text. '#' and ';' start comments; rationals
// accept "p/q", integers and exact decimals. Instances have too many
// parameters for flags, so everything configurable lives here.
class ConfigFile {
  public:
    static ConfigFile parse(const std::string& text, const std::string& origin = "<memory>");
    static ConfigFile load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::optional<std::string> get(const std::string& section, const std::string& key) const;

    Rational get_rational(const std::string& section, const std::string& key,
                          const Rational& fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    std::vector<Rational> get_rational_list(const std::string& section, const std::string& key,
                                            const std::vector<Rational>& fallback) const;
    std::vector<int> get_int_list(const std::string& section, const std::string& key,
                                  const std::vector<int>& fallback) const;

    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }
    const std::string& origin() const { return origin_; }

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::string origin_;
};

enum class OutputFormat { markdown, csv, json };
OutputFormat parse_output_format(const std::string& name);

// Everything one command invocation needs.
struct RunConfig {
    HardwareProfile hardware;
    QFlyTopology topology;
    QAOAInstance qaoa;
    DQIInstance dqi;
    AVScenario av2 = default_av2_scenario();
    AVScenario av10 = default_av10_scenario();
    std::vector<Rational> t_bell_points = {Rational{2}, Rational{5}, Rational{10}};
    OutputFormat format = OutputFormat::markdown;

    bool default_eval_points() const;
};

// Defaults when no config is given; otherwise parses the file, with AV
// scenario paths resolved relative to the config's directory. Throws
// std::invalid_argument / std::runtime_error on config errors.
RunConfig load_run_config(const std::optional<std::string>& path);

AVScenario load_av_scenario(const std::string& path);

// Round-trip support: profiles serialize back to the [hardware] section
// bit-exactly.
std::string hardware_to_config(const HardwareProfile& hw);
HardwareProfile hardware_from_config(const ConfigFile& cfg);

}  // namespace qfre
