#include "dearank/run.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "dearank/csv.hpp"
#include "dearank/datasets.hpp"

namespace dearank {

std::string to_string(Method m) {
    switch (m) {
        case Method::Sadea: return "sadea";
        case Method::Topsis: return "topsis";
        case Method::Maxmin: return "maxmin";
        case Method::Ccr: return "ccr";
        case Method::Super: return "super";
        case Method::NonRadial: return "nonradial";
    }
    return "?";
}

Method parse_method(std::string_view s) {
    if (s == "sadea") return Method::Sadea;
    if (s == "topsis") return Method::Topsis;
    if (s == "maxmin") return Method::Maxmin;
    if (s == "ccr") return Method::Ccr;
    if (s == "super") return Method::Super;
    if (s == "nonradial") return Method::NonRadial;
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

std::string to_string(ReturnsToScale rts) {
    return rts == ReturnsToScale::CRS ? "crs" : "irs";
}

ReturnsToScale parse_rts(std::string_view s) {
    if (s == "crs") return ReturnsToScale::CRS;
    if (s == "irs") return ReturnsToScale::IRS;
    throw std::invalid_argument("unknown returns-to-scale '" + std::string(s) +
                                "' (expected crs or irs)");
}

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Table: return "table";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

OutputFormat parse_format(std::string_view s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

std::string to_string(MembershipDirection d) {
    return d == MembershipDirection::Corrected ? "corrected" : "literal";
}

MembershipDirection parse_membership(std::string_view s) {
    if (s == "corrected") return MembershipDirection::Corrected;
    if (s == "literal") return MembershipDirection::Literal;
    throw std::invalid_argument("unknown membership direction '" + std::string(s) +
                                "' (expected corrected or literal)");
}

void validate_config(const RunConfig& cfg) {
    if (cfg.demo.has_value() == cfg.input.has_value())
        throw std::invalid_argument("exactly one of a demo dataset or an input file "
                                    "must be given");
    if (!cfg.weights.empty() && cfg.method != Method::Topsis)
        throw std::invalid_argument("weights only apply to the topsis method");
    if (cfg.rts.has_value() && cfg.method != Method::Ccr && cfg.method != Method::Super)
        throw std::invalid_argument("returns-to-scale only applies to ccr and super");
    if (cfg.exclude_self && cfg.method != Method::NonRadial)
        throw std::invalid_argument("self-exclusion only applies to nonradial");
    if (cfg.jobs < 1)
        throw std::invalid_argument("jobs must be at least 1");
}

DecisionMatrix load_input(const RunConfig& cfg) {
    validate_config(cfg);
    if (cfg.demo) return demo_dataset(*cfg.demo);
    return ingest_csv(*cfg.input);
}

RunOutput run(const RunConfig& cfg, const DecisionMatrix& m) {
    validate_config(cfg);
    m.ensure_valid();

    RunOutput out;
    out.method = cfg.method;

    std::vector<std::string> names;
    for (std::size_t j = 0; j < m.alternatives(); ++j) names.push_back(m.name(j));

    switch (cfg.method) {
        case Method::Sadea: {
            SadeaOptions sopts;
            sopts.direction = cfg.membership;
            sopts.jobs = cfg.jobs;
            sopts.lp = cfg.lp;
            out.sadea_results = sadea_all(m, sopts);
            std::vector<double> scores;
            for (const auto& r : out.sadea_results) scores.push_back(r.score);
            out.ranking = make_ranking("sadea", RankOrder::LowerBetter, names, scores);
            break;
        }
        case Method::Topsis: {
            out.topsis_result = topsis(m, cfg.weights);
            out.ranking = make_ranking("topsis", RankOrder::HigherBetter, names,
                                       out.topsis_result->closeness);
            break;
        }
        case Method::Maxmin: {
            out.maxmin_trace = maxmin_full_ranking(m);
            out.ranking = out.maxmin_trace->ranking;
            break;
        }
        case Method::Ccr:
        case Method::Super:
        case Method::NonRadial: {
            ReturnsToScale rts = cfg.rts.value_or(ReturnsToScale::CRS);
            std::vector<double> scores;
            for (std::size_t p = 0; p < m.alternatives(); ++p) {
                EfficiencyResult r;
                if (cfg.method == Method::Ccr)
                    r = ccr_efficiency(m, p, rts, cfg.lp);
                else if (cfg.method == Method::Super)
                    r = super_efficiency(m, p, rts, cfg.lp);
                else
                    r = saati_nonradial(m, p, cfg.exclude_self, cfg.lp);
                if (r.status != LpStatus::Optimal) {
                    out.all_solved = false;
                    scores.push_back(std::nan(""));
                } else {
                    scores.push_back(r.score);
                }
                out.dea_results.push_back(std::move(r));
            }
            out.ranking = make_ranking(to_string(cfg.method), RankOrder::HigherBetter,
                                       names, scores);
            break;
        }
    }
    return out;
}

const std::string& RunOutput::name_of(std::size_t index) const {
    for (const auto& e : ranking.entries)
        if (e.index == index) return e.name;
    throw std::out_of_range("no ranking entry for that alternative");
}

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, static_cast<std::size_t>(ptr - buf));
}

} // namespace

nlohmann::json RunOutput::to_json() const {
    nlohmann::json j;
    j["method"] = to_string(method);
    j["direction"] =
        ranking.order == RankOrder::HigherBetter ? "higherBetter" : "lowerBetter";
    j["entries"] = nlohmann::json::array();
    for (const auto& e : ranking.entries) {
        nlohmann::json je;
        je["name"] = e.name;
        if (std::isnan(e.score))
            je["score"] = nullptr;
        else
            je["score"] = e.score;
        je["rank"] = e.rank_label;
        j["entries"].push_back(std::move(je));
    }
    if (maxmin_trace) {
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& lv : maxmin_trace->levels) {
            nlohmann::json jl;
            jl["survivors"] = nlohmann::json::array();
            for (std::size_t s : lv.survivors) jl["survivors"].push_back(name_of(s));
            jl["h"] = lv.h;
            jl["minima"] = lv.min_h;
            jl["selected"] = nlohmann::json::array();
            for (std::size_t s : lv.selected) jl["selected"].push_back(name_of(s));
            jl["score"] = lv.level_score;
            levels.push_back(std::move(jl));
        }
        j["trace"] = {{"levels", std::move(levels)}};
    }
    return j;
}

std::string RunOutput::format_table() const {
    std::size_t name_w = 4;
    for (const auto& e : ranking.entries) name_w = std::max(name_w, e.name.size());
    std::size_t rank_w = 4;
    for (const auto& e : ranking.entries)
        rank_w = std::max(rank_w, e.rank_label.size());

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(rank_w)) << "rank" << "  "
       << std::setw(static_cast<int>(name_w)) << "name" << "  " << "score\n";
    for (const auto& e : ranking.entries) {
        os << std::left << std::setw(static_cast<int>(rank_w)) << e.rank_label << "  "
           << std::setw(static_cast<int>(name_w)) << e.name << "  ";
        if (std::isnan(e.score))
            os << "-";
        else
            os << std::fixed << std::setprecision(7) << e.score;
        os << '\n';
        os.unsetf(std::ios::fixed);
    }
    if (maxmin_trace) {
        os << "\nelimination trace:\n";
        std::size_t round = 1;
        for (const auto& lv : maxmin_trace->levels) {
            os << "  round " << round++ << ": ";
            for (std::size_t i = 0; i < lv.selected.size(); ++i) {
                if (i) os << ", ";
                os << name_of(lv.selected[i]);
            }
            os << "  (score " << std::fixed << std::setprecision(6) << lv.level_score
               << ")\n";
            os.unsetf(std::ios::fixed);
        }
    }
    return os.str();
}

std::string RunOutput::format_csv() const {
    std::string out = "name,score,rank\n";
    for (const auto& e : ranking.entries) {
        out += e.name;
        out += ',';
        out += std::isnan(e.score) ? "" : shortest(e.score);
        out += ',';
        out += e.rank_label;
        out += '\n';
    }
    return out;
}

std::string RunOutput::render(OutputFormat f) const {
    switch (f) {
        case OutputFormat::Table: return format_table();
        case OutputFormat::Json: return to_json().dump(2) + "\n";
        case OutputFormat::Csv: return format_csv();
    }
    return {};
}

} // namespace dearank
