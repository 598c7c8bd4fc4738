#pragma once

#include <cstddef>
#include <vector>

#include "dearank/lp.hpp"
#include "dearank/matrix.hpp"
#include "dearank/ranking.hpp"

namespace dearank {

/// Orientation of the linear input membership grade. Corrected treats a
/// *reduction* of the input as increasingly satisfactory (grade 1 at zero
/// input, 0 at the observed level) and is the default; Literal keeps the
/// opposite reading, retained for comparison runs.
enum class MembershipDirection { Corrected, Literal };

/// Piecewise-linear degree-of-satisfaction map on a closed interval
/// [anchor_low, anchor_high], affine between the grades attached to the two
/// ends. A collapsed interval (output already at the normalized ceiling) is
/// flagged degenerate and grades its single point 1.
struct MembershipFunction {
    double anchor_low = 0.0;
    double anchor_high = 1.0;
    double grade_low = 0.0;  // grade at anchor_low
    double grade_high = 1.0; // grade at anchor_high
    bool degenerate = false;

    /// Grade at v. Throws std::domain_error outside [anchor_low, anchor_high].
    double degree(double v) const;

    /// Grade for a candidate input level in [0, xp] given observed level xp.
    static MembershipFunction input_linear(
        double xp, MembershipDirection dir = MembershipDirection::Corrected);

    /// Grade for a candidate output level in [yp, 1] given observed
    /// normalized level yp; degenerate when yp is already 1.
    static MembershipFunction output_linear(double yp);
};

/// Convenience wrappers over the factory functions above.
double input_membership(double xbar, double xp,
                        MembershipDirection dir = MembershipDirection::Corrected);
double output_membership(double ybar, double yp);

struct SadeaOptions {
    MembershipDirection direction = MembershipDirection::Corrected;
    int jobs = 1; // worker threads used by sadea_rank
    LpOptions lp;
};

struct SadeaResult {
    std::size_t dmu = 0;
    double alpha = 0.0;  // optimal joint satisfaction grade
    double score = 0.0;  // 1 - alpha; lower = better
    double lambda = 0.0; // intensity on the evaluated DMU's own bundle
    std::vector<double> input_point;   // fuzzy input coordinates at optimum
    std::vector<double> output_point;  // fuzzy output coordinates at optimum
    std::vector<std::size_t> degenerate_outputs; // outputs pinned at the ceiling
};

/// Self-assessment score of one DMU on column-max normalized data: the DMU is
/// compared against a single fuzzy DMU ranging over its own effective space
/// (inputs in [0, xp], outputs in [yp, 1]), maximizing the smallest
/// membership grade alpha subject to the envelopment rows. Score = 1 - alpha.
SadeaResult sadea_score(const DecisionMatrix& m, std::size_t dmu,
                        const SadeaOptions& opts = {});

/// Scores every DMU (optionally in parallel) and ranks ascending.
Ranking sadea_rank(const DecisionMatrix& m, const SadeaOptions& opts = {});

/// The per-DMU results backing sadea_rank, in matrix order.
std::vector<SadeaResult> sadea_all(const DecisionMatrix& m,
                                   const SadeaOptions& opts = {});

} // namespace dearank
