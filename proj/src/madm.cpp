#include "dearank/madm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dearank {

namespace {

// Max-min normalized rows h_ij restricted to `survivors`: benefit columns
// scaled by the survivors' maximum, cost columns inverted against the
// survivors' minimum.
std::vector<std::vector<double>> maxmin_rows(
    const DecisionMatrix& m, const std::vector<std::size_t>& survivors) {
    const std::size_t na = m.attributes();
    std::vector<double> colmax(na, -std::numeric_limits<double>::infinity());
    std::vector<double> colmin(na, std::numeric_limits<double>::infinity());
    for (std::size_t j : survivors) {
        for (std::size_t i = 0; i < na; ++i) {
            colmax[i] = std::max(colmax[i], m.value(j, i));
            colmin[i] = std::min(colmin[i], m.value(j, i));
        }
    }
    for (std::size_t i = 0; i < na; ++i) {
        if (m.attribute(i).role == AttributeRole::Output && !(colmax[i] > 0.0))
            throw std::invalid_argument(
                "benefit attribute '" + m.attribute(i).label +
                "' has no positive value among the alternatives considered");
    }
    std::vector<std::vector<double>> h(survivors.size(),
                                       std::vector<double>(na, 0.0));
    for (std::size_t s = 0; s < survivors.size(); ++s) {
        std::size_t j = survivors[s];
        for (std::size_t i = 0; i < na; ++i) {
            if (m.attribute(i).role == AttributeRole::Output)
                h[s][i] = m.value(j, i) / colmax[i];
            else
                h[s][i] = colmin[i] / m.value(j, i);
        }
    }
    return h;
}

std::vector<double> row_minima(const std::vector<std::vector<double>>& h) {
    std::vector<double> mins(h.size());
    for (std::size_t s = 0; s < h.size(); ++s)
        mins[s] = *std::min_element(h[s].begin(), h[s].end());
    return mins;
}

} // namespace

std::vector<double> maxmin_scores(const DecisionMatrix& m) {
    m.ensure_valid();
    std::vector<std::size_t> all(m.alternatives());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    return row_minima(maxmin_rows(m, all));
}

MaxminTrace maxmin_full_ranking(const DecisionMatrix& m) {
    m.ensure_valid();
    MaxminTrace trace;
    trace.ranking.method = "maxmin";
    trace.ranking.order = RankOrder::HigherBetter;

    std::vector<std::size_t> survivors(m.alternatives());
    for (std::size_t j = 0; j < survivors.size(); ++j) survivors[j] = j;

    std::size_t next_position = 1;
    while (!survivors.empty()) {
        MaxminLevel level;
        level.survivors = survivors;
        level.h = maxmin_rows(m, survivors);
        level.min_h = row_minima(level.h);

        double best = *std::max_element(level.min_h.begin(), level.min_h.end());
        level.level_score = best;
        for (std::size_t s = 0; s < survivors.size(); ++s)
            if (level.min_h[s] == best) level.selected.push_back(survivors[s]);

        std::string label;
        for (std::size_t g = 0; g < level.selected.size(); ++g) {
            if (!label.empty()) label += '-';
            label += std::to_string(next_position + g);
        }
        for (std::size_t idx : level.selected) {
            RankingEntry e;
            e.index = idx;
            e.name = m.name(idx);
            e.score = best;
            e.rank = next_position;
            e.rank_label = label;
            trace.ranking.entries.push_back(std::move(e));
        }
        next_position += level.selected.size();

        std::vector<std::size_t> rest;
        for (std::size_t j : survivors)
            if (std::find(level.selected.begin(), level.selected.end(), j) ==
                level.selected.end())
                rest.push_back(j);
        survivors = std::move(rest);
        trace.levels.push_back(std::move(level));
    }
    return trace;
}

TopsisResult topsis(const DecisionMatrix& m, const std::vector<double>& weights) {
    m.ensure_valid();
    const std::size_t n = m.alternatives();
    const std::size_t na = m.attributes();

    TopsisResult res;
    if (weights.empty()) {
        res.weights.assign(na, 1.0 / static_cast<double>(na));
    } else {
        if (weights.size() != na)
            throw std::invalid_argument("topsis: weight count does not match attributes");
        double sum = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0))
                throw std::invalid_argument("topsis: weights must be nonnegative");
            sum += w;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("topsis: weights must sum to 1");
        res.weights = weights;
    }

    std::vector<double> norms(na, 0.0);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < n; ++j) norms[i] += m.value(j, i) * m.value(j, i);
        norms[i] = std::sqrt(norms[i]);
        if (!(norms[i] > 0.0))
            throw std::invalid_argument("topsis: attribute '" + m.attribute(i).label +
                                        "' is identically zero");
    }

    res.normalized.assign(n, std::vector<double>(na, 0.0));
    res.weighted.assign(n, std::vector<double>(na, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < na; ++i) {
            res.normalized[j][i] = m.value(j, i) / norms[i];
            res.weighted[j][i] = res.weights[i] * res.normalized[j][i];
        }
    }

    res.ideal.resize(na);
    res.anti_ideal.resize(na);
    for (std::size_t i = 0; i < na; ++i) {
        double lo = res.weighted[0][i], hi = res.weighted[0][i];
        for (std::size_t j = 1; j < n; ++j) {
            lo = std::min(lo, res.weighted[j][i]);
            hi = std::max(hi, res.weighted[j][i]);
        }
        if (m.attribute(i).role == AttributeRole::Output) {
            res.ideal[i] = hi;
            res.anti_ideal[i] = lo;
        } else {
            res.ideal[i] = lo;
            res.anti_ideal[i] = hi;
        }
    }

    res.s_plus.assign(n, 0.0);
    res.s_minus.assign(n, 0.0);
    res.closeness.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double dp = 0.0, dm = 0.0;
        for (std::size_t i = 0; i < na; ++i) {
            dp += (res.weighted[j][i] - res.ideal[i]) * (res.weighted[j][i] - res.ideal[i]);
            dm += (res.weighted[j][i] - res.anti_ideal[i]) *
                  (res.weighted[j][i] - res.anti_ideal[i]);
        }
        res.s_plus[j] = std::sqrt(dp);
        res.s_minus[j] = std::sqrt(dm);
        double denom = res.s_plus[j] + res.s_minus[j];
        // equidistant only when ideal == anti-ideal, i.e. identical rows
        res.closeness[j] = denom > 0.0 ? res.s_minus[j] / denom : 0.5;
    }
    return res;
}

} // namespace dearank
