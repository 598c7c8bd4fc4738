#include "dearank/dea.hpp"

#include <stdexcept>

namespace dearank {

namespace {

void check_dmu(const DecisionMatrix& m, std::size_t dmu) {
    if (dmu >= m.alternatives())
        throw std::out_of_range("dmu index out of range");
}

// min theta  s.t.  sum_j lambda_j x_ij <= theta x_ip   (inputs)
//                  sum_j lambda_j y_rj >= y_rp         (outputs)
//                  sum_j lambda_j >= 1                 (IRS only)
// with lambda_p additionally fixed to zero in the self-excluded variant.
EfficiencyResult radial(const DecisionMatrix& m, std::size_t dmu,
                        ReturnsToScale rts, bool exclude_self,
                        const LpOptions& opts) {
    check_dmu(m, dmu);
    m.ensure_valid();
    if (exclude_self && m.alternatives() < 2)
        throw std::invalid_argument("self-excluded model needs at least two DMUs");

    const std::size_t n = m.alternatives();
    LinearProgram lp;
    int theta = lp.add_free_variable(1.0);
    std::vector<int> lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
        VariableBounds b;
        if (exclude_self && j == dmu) b.upper = 0.0;
        lambda[j] = lp.add_variable(0.0, b);
    }

    for (std::size_t k = 0; k < m.inputs(); ++k) {
        std::vector<double> row(lp.num_variables(), 0.0);
        row[theta] = -m.input(dmu, k);
        for (std::size_t j = 0; j < n; ++j) row[lambda[j]] = m.input(j, k);
        lp.add_constraint(std::move(row), Relation::LessEq, 0.0);
    }
    for (std::size_t r = 0; r < m.outputs(); ++r) {
        std::vector<double> row(lp.num_variables(), 0.0);
        for (std::size_t j = 0; j < n; ++j) row[lambda[j]] = m.output(j, r);
        lp.add_constraint(std::move(row), Relation::GreaterEq, m.output(dmu, r));
    }
    if (rts == ReturnsToScale::IRS) {
        std::vector<double> row(lp.num_variables(), 0.0);
        for (std::size_t j = 0; j < n; ++j) row[lambda[j]] = 1.0;
        lp.add_constraint(std::move(row), Relation::GreaterEq, 1.0);
    }

    LpSolution sol = solve(lp, opts);

    EfficiencyResult res;
    res.dmu = dmu;
    res.model = exclude_self ? DeaModel::SuperEfficiency : DeaModel::Ccr;
    res.rts = rts;
    res.excluded_self = exclude_self;
    res.status = sol.status;
    if (sol.status == LpStatus::Optimal) {
        res.score = sol.objective_value;
        res.intensities.resize(n);
        for (std::size_t j = 0; j < n; ++j) res.intensities[j] = sol.values[lambda[j]];
    } else if (!exclude_self) {
        // the self-covering solution always exists; anything else is a bug
        throw std::runtime_error("radial efficiency program did not solve");
    }
    return res;
}

} // namespace

EfficiencyResult ccr_efficiency(const DecisionMatrix& m, std::size_t dmu,
                                ReturnsToScale rts, const LpOptions& opts) {
    return radial(m, dmu, rts, false, opts);
}

EfficiencyResult super_efficiency(const DecisionMatrix& m, std::size_t dmu,
                                  ReturnsToScale rts, const LpOptions& opts) {
    return radial(m, dmu, rts, true, opts);
}

// min omega  s.t.  sum_j lambda_j x'_ij <= x'_ip + omega   (inputs)
//                  sum_j lambda_j y'_rj >= y'_rp - omega   (outputs)
// on column-max normalized data; reported score is Omega = omega + 1.
EfficiencyResult saati_nonradial(const DecisionMatrix& m, std::size_t dmu,
                                 bool exclude_self, const LpOptions& opts) {
    check_dmu(m, dmu);
    m.ensure_valid();
    if (exclude_self && m.alternatives() < 2)
        throw std::invalid_argument("self-excluded model needs at least two DMUs");

    const NormalizedMatrix norm = normalize(m);
    const DecisionMatrix& nm = norm.matrix();
    const std::size_t n = nm.alternatives();

    LinearProgram lp;
    int omega = lp.add_free_variable(1.0);
    std::vector<int> lambda(n);
    for (std::size_t j = 0; j < n; ++j) {
        VariableBounds b;
        if (exclude_self && j == dmu) b.upper = 0.0;
        lambda[j] = lp.add_variable(0.0, b);
    }

    for (std::size_t k = 0; k < nm.inputs(); ++k) {
        std::vector<double> row(lp.num_variables(), 0.0);
        row[omega] = -1.0;
        for (std::size_t j = 0; j < n; ++j) row[lambda[j]] = nm.input(j, k);
        lp.add_constraint(std::move(row), Relation::LessEq, nm.input(dmu, k));
    }
    for (std::size_t r = 0; r < nm.outputs(); ++r) {
        std::vector<double> row(lp.num_variables(), 0.0);
        row[omega] = 1.0;
        for (std::size_t j = 0; j < n; ++j) row[lambda[j]] = nm.output(j, r);
        lp.add_constraint(std::move(row), Relation::GreaterEq, nm.output(dmu, r));
    }

    LpSolution sol = solve(lp, opts);

    EfficiencyResult res;
    res.dmu = dmu;
    res.model = DeaModel::NonRadial;
    res.excluded_self = exclude_self;
    res.status = sol.status;
    if (sol.status == LpStatus::Optimal) {
        res.score = sol.objective_value + 1.0;
        res.intensities.resize(n);
        for (std::size_t j = 0; j < n; ++j) res.intensities[j] = sol.values[lambda[j]];
    }
    return res;
}

} // namespace dearank
