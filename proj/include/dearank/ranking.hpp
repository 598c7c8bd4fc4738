#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dearank {

enum class RankOrder { HigherBetter, LowerBetter };

struct RankingEntry {
    std::size_t index = 0;    // position in the source matrix
    std::string name;
    double score = 0.0;       // NaN when the underlying model had no solution
    std::size_t rank = 0;     // 1-based; ties share the smallest position; 0 if unranked
    std::string rank_label;   // "4", "11-12-13" for a 3-way tie, "-" if unranked
};

/// Entries sorted best-first with competition ranking: a k-way tie occupies k
/// consecutive positions and every member carries the full "p-p+1-...-q"
/// label. NaN scores sort last and stay unranked. Ties are detected within
/// tie_eps; order inside a tie group follows the source index, so the result
/// is deterministic.
struct Ranking {
    std::string method;
    RankOrder order = RankOrder::HigherBetter;
    std::vector<RankingEntry> entries;

    /// Rank label of the alternative at source index j.
    const std::string& label_of(std::size_t j) const;
    /// Score of the alternative at source index j.
    double score_of(std::size_t j) const;
};

Ranking make_ranking(std::string method, RankOrder order,
                     const std::vector<std::string>& names,
                     const std::vector<double>& scores,
                     double tie_eps = 1e-9);

} // namespace dearank
