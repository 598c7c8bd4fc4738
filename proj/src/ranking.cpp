#include "dearank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dearank {

const std::string& Ranking::label_of(std::size_t j) const {
    for (const auto& e : entries)
        if (e.index == j) return e.rank_label;
    throw std::out_of_range("no ranking entry for that alternative");
}

double Ranking::score_of(std::size_t j) const {
    for (const auto& e : entries)
        if (e.index == j) return e.score;
    throw std::out_of_range("no ranking entry for that alternative");
}

Ranking make_ranking(std::string method, RankOrder order,
                     const std::vector<std::string>& names,
                     const std::vector<double>& scores, double tie_eps) {
    if (names.size() != scores.size())
        throw std::invalid_argument("ranking: names and scores differ in count");

    Ranking rk;
    rk.method = std::move(method);
    rk.order = order;

    std::vector<std::size_t> idx(names.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        bool na = std::isnan(scores[a]), nb = std::isnan(scores[b]);
        if (na != nb) return nb; // NaN (unsolved) sinks to the end
        if (na) return a < b;
        if (scores[a] == scores[b]) return a < b;
        return order == RankOrder::HigherBetter ? scores[a] > scores[b]
                                                : scores[a] < scores[b];
    });

    // competition ranking over tie groups
    std::size_t pos = 0;
    while (pos < idx.size()) {
        if (std::isnan(scores[idx[pos]])) {
            for (; pos < idx.size(); ++pos) {
                RankingEntry e;
                e.index = idx[pos];
                e.name = names[e.index];
                e.score = scores[e.index];
                e.rank = 0;
                e.rank_label = "-";
                rk.entries.push_back(std::move(e));
            }
            break;
        }
        std::size_t end = pos + 1;
        while (end < idx.size() && !std::isnan(scores[idx[end]]) &&
               std::fabs(scores[idx[end]] - scores[idx[pos]]) <= tie_eps)
            ++end;
        std::string label;
        for (std::size_t p = pos; p < end; ++p) {
            if (!label.empty()) label += '-';
            label += std::to_string(p + 1);
        }
        for (std::size_t p = pos; p < end; ++p) {
            RankingEntry e;
            e.index = idx[p];
            e.name = names[e.index];
            e.score = scores[e.index];
            e.rank = pos + 1;
            e.rank_label = label;
            rk.entries.push_back(std::move(e));
        }
        pos = end;
    }
    return rk;
}

} // namespace dearank
