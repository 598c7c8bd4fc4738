#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dearank/dea.hpp"
#include "dearank/madm.hpp"
#include "dearank/matrix.hpp"
#include "dearank/ranking.hpp"
#include "dearank/sadea.hpp"

namespace dearank {

enum class Method { Sadea, Topsis, Maxmin, Ccr, Super, NonRadial };
enum class OutputFormat { Table, Json, Csv };

/// Round-trippable enum name ("sadea", "ccr", ...). Parsers throw
/// std::invalid_argument on unknown names.
std::string to_string(Method m);
Method parse_method(std::string_view s);
std::string to_string(ReturnsToScale rts);
ReturnsToScale parse_rts(std::string_view s);
std::string to_string(OutputFormat f);
OutputFormat parse_format(std::string_view s);
std::string to_string(MembershipDirection d);
MembershipDirection parse_membership(std::string_view s);

/// One fully-specified evaluation request. Exactly one of demo / input must
/// be set; option fields that do not apply to the chosen method are rejected
/// by validate_config().
struct RunConfig {
    Method method = Method::Sadea;
    std::optional<std::string> demo;       // bundled dataset id
    std::optional<std::string> input;      // CSV path
    OutputFormat format = OutputFormat::Table;
    std::vector<double> weights;           // topsis only; empty = equal
    std::optional<ReturnsToScale> rts;     // ccr / super only; default CRS
    bool exclude_self = false;             // nonradial only
    MembershipDirection membership = MembershipDirection::Corrected;
    int jobs = 1;
    LpOptions lp;
};

/// Throws std::invalid_argument for contradictory or inapplicable options.
void validate_config(const RunConfig& cfg);

/// Loads cfg.demo or cfg.input (validated). Throws on unknown demo id; file
/// problems surface as CsvError / std::invalid_argument.
DecisionMatrix load_input(const RunConfig& cfg);

struct RunOutput {
    Method method = Method::Sadea;
    Ranking ranking;
    bool all_solved = true;                       // false if any DMU had no optimum
    std::vector<EfficiencyResult> dea_results;    // ccr / super / nonradial
    std::vector<SadeaResult> sadea_results;       // sadea
    std::optional<MaxminTrace> maxmin_trace;      // maxmin
    std::optional<TopsisResult> topsis_result;    // topsis

    nlohmann::json to_json() const;
    std::string format_table() const;
    std::string format_csv() const;
    std::string render(OutputFormat f) const;

    /// Alternative name at source index, looked up through the ranking.
    const std::string& name_of(std::size_t index) const;
};

/// Evaluate every alternative of m under the configured method and rank.
RunOutput run(const RunConfig& cfg, const DecisionMatrix& m);

} // namespace dearank
