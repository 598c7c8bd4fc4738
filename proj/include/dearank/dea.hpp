#pragma once

#include <cstddef>
#include <vector>

#include "dearank/lp.hpp"
#include "dearank/matrix.hpp"

namespace dearank {

enum class ReturnsToScale { CRS, IRS };

enum class DeaModel { Ccr, SuperEfficiency, NonRadial };

struct EfficiencyResult {
    std::size_t dmu = 0;
    DeaModel model = DeaModel::Ccr;
    ReturnsToScale rts = ReturnsToScale::CRS;
    bool excluded_self = false;
    LpStatus status = LpStatus::Optimal;
    double score = 0.0;               // theta (radial) or Omega (non-radial)
    std::vector<double> intensities;  // lambda_j, one per alternative
};

/// Input-oriented radial efficiency of one DMU: the smallest uniform input
/// contraction theta that keeps the DMU inside the production possibility
/// set spanned by all DMUs. IRS adds the convexity-side restriction
/// sum(lambda) >= 1. Always feasible (the DMU covers itself); 0 < theta <= 1.
EfficiencyResult ccr_efficiency(const DecisionMatrix& m, std::size_t dmu,
                                ReturnsToScale rts = ReturnsToScale::CRS,
                                const LpOptions& opts = {});

/// Radial efficiency against the frontier built without the evaluated DMU
/// (lambda_dmu forced to zero). Scores may exceed 1; the program can be
/// infeasible under IRS, reported via status rather than a sentinel score.
EfficiencyResult super_efficiency(const DecisionMatrix& m, std::size_t dmu,
                                  ReturnsToScale rts = ReturnsToScale::CRS,
                                  const LpOptions& opts = {});

/// Non-radial efficiency on column-max normalized data: one additive
/// adjustment omega relaxes every input row and tightens every output row;
/// the reported score is Omega = omega* + 1. With exclude_self the evaluated
/// DMU is dropped from the reference set (lambda_dmu = 0).
EfficiencyResult saati_nonradial(const DecisionMatrix& m, std::size_t dmu,
                                 bool exclude_self = false,
                                 const LpOptions& opts = {});

} // namespace dearank
