#pragma once

#include "qfre/algorithms.hpp"
#include "qfre/baseline_av.hpp"
#include "qfre/config.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qfre {

// One row of the resource table: a subroutine or algorithm stage with its
// closed form, optional baseline columns and the evaluated cycle counts.
struct TableRow {
    std::string section;
    std::string key;  // "core.gidney_adder", "qaoa.total", ...
    std::string display;
    std::string formula;
    bool is_total = false;
    std::optional<std::int64_t> av2;
    std::optional<std::int64_t> av10;
    std::vector<std::int64_t> cycles;   // one per eval point
    std::vector<Rational> exact;        // pre-rounding values, same order
    Rational bell_slope{0};
    std::optional<std::int64_t> toffoli_count;  // provenance for subroutine rows
};

struct ResourceTable {
    std::vector<Rational> t_points;
    bool has_av = false;  // AV columns only at the canonical {2, 5, 10} points
    std::vector<TableRow> rows;
};

ResourceTable build_resource_table(const RunConfig& config);

std::string render_table_markdown(const ResourceTable& table);
std::string render_table_csv(const ResourceTable& table);
std::string render_table_json(const ResourceTable& table);

// Stage-level report for `estimate`.
std::string render_report_markdown(const AlgorithmReport& report,
                                   const std::vector<Rational>& t_points);
std::string render_report_csv(const AlgorithmReport& report,
                              const std::vector<Rational>& t_points);
std::string render_report_json(const AlgorithmReport& report,
                               const std::vector<Rational>& t_points);

// Expected values for every populated cell of the reference table, keyed by
// (row key, column key) with columns "AV2", "t=2", "t=5", "AV10", "t=10".
const std::map<std::pair<std::string, std::string>, std::int64_t>& reference_table_cells();

struct CheckResult {
    int cells_checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

CheckResult check_against_reference(const ResourceTable& table);

std::string format_with_commas(std::int64_t value);

}  // namespace qfre
