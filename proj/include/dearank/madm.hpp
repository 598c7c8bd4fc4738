#pragma once

#include <cstddef>
#include <vector>

#include "dearank/matrix.hpp"
#include "dearank/ranking.hpp"

namespace dearank {

/// Worst normalized attribute of each alternative: benefit columns are scaled
/// by the column maximum (r / max), cost columns inverted against the column
/// minimum (min / r). Throws std::invalid_argument if a benefit column has no
/// positive value.
std::vector<double> maxmin_scores(const DecisionMatrix& m);

/// One elimination round of the sequential max-min ranking.
struct MaxminLevel {
    std::vector<std::size_t> survivors;  // alternatives still in play, ascending
    std::vector<std::vector<double>> h;  // normalized rows, aligned with survivors
    std::vector<double> min_h;           // worst attribute per survivor
    std::vector<std::size_t> selected;   // argmax set removed this round
    double level_score = 0.0;            // the shared max-min value of `selected`
};

struct MaxminTrace {
    std::vector<MaxminLevel> levels;
    Ranking ranking; // ordered by elimination round, ties within a round
};

/// Full sequential ranking: repeatedly pick the alternative(s) with the best
/// worst-attribute, remove them, renormalize over the survivors, repeat.
/// Alternatives tied exactly at a round's maximum leave together as one rank
/// group. Note the ranking order is the elimination order; because columns
/// are renormalized between rounds, level scores are not comparable across
/// rounds and the Ranking's scores are not globally monotone.
MaxminTrace maxmin_full_ranking(const DecisionMatrix& m);

/// Intermediate products of the closeness-to-ideal ranking, kept for
/// inspection and tests.
struct TopsisResult {
    std::vector<double> weights;
    std::vector<std::vector<double>> normalized; // r / sqrt(sum r^2) per column
    std::vector<std::vector<double>> weighted;   // normalized * weight
    std::vector<double> ideal;       // per attribute: best weighted value
    std::vector<double> anti_ideal;  // per attribute: worst weighted value
    std::vector<double> s_plus;      // Euclidean distance to ideal
    std::vector<double> s_minus;     // Euclidean distance to anti-ideal
    std::vector<double> closeness;   // s_minus / (s_plus + s_minus)
};

/// Closeness-to-ideal ranking scores. Benefit attributes contribute their
/// maximum to the ideal point and minimum to the anti-ideal; cost attributes
/// the reverse. Weights must be nonnegative and sum to 1 (pass empty for
/// equal weights). Throws std::invalid_argument on an all-zero column or bad
/// weights.
TopsisResult topsis(const DecisionMatrix& m,
                    const std::vector<double>& weights = {});

} // namespace dearank
