#include "dearank/sadea.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dearank {

namespace {
constexpr double kDegenerateEps = 1e-12;
}

double MembershipFunction::degree(double v) const {
    double lo = anchor_low, hi = anchor_high;
    if (v < lo - kDegenerateEps || v > hi + kDegenerateEps)
        throw std::domain_error("membership argument outside the support interval");
    if (degenerate) return 1.0;
    v = std::clamp(v, lo, hi);
    double t = (v - lo) / (hi - lo);
    return grade_low + t * (grade_high - grade_low);
}

MembershipFunction MembershipFunction::input_linear(double xp,
                                                    MembershipDirection dir) {
    if (!(xp > 0.0))
        throw std::invalid_argument("input membership needs a positive observed level");
    MembershipFunction f;
    f.anchor_low = 0.0;
    f.anchor_high = xp;
    if (dir == MembershipDirection::Corrected) {
        f.grade_low = 1.0; // full satisfaction at zero consumption
        f.grade_high = 0.0;
    } else {
        f.grade_low = 0.0;
        f.grade_high = 1.0;
    }
    return f;
}

MembershipFunction MembershipFunction::output_linear(double yp) {
    if (yp < 0.0 || yp > 1.0 + kDegenerateEps)
        throw std::invalid_argument("output membership needs a level in [0, 1]");
    MembershipFunction f;
    f.anchor_low = std::min(yp, 1.0);
    f.anchor_high = 1.0;
    f.grade_low = 0.0;
    f.grade_high = 1.0;
    if (f.anchor_high - f.anchor_low <= kDegenerateEps) {
        f.anchor_low = f.anchor_high;
        f.degenerate = true;
    }
    return f;
}

double input_membership(double xbar, double xp, MembershipDirection dir) {
    return MembershipFunction::input_linear(xp, dir).degree(xbar);
}

double output_membership(double ybar, double yp) {
    return MembershipFunction::output_linear(yp).degree(ybar);
}

// max alpha over (alpha, w, lambda, xbar_i, ybar_r):
//   lambda * x'_ip - xbar_i <= w                      (input envelopment)
//   ybar_r - lambda * y'_rp <= w                      (output envelopment)
//   alpha <= membership of xbar_i                     (linear in xbar_i)
//   alpha <= membership of ybar_r                     (dropped when degenerate)
//   alpha + w <= 1
//   0 <= xbar_i <= x'_ip,  y'_rp <= ybar_r <= 1,  lambda >= 0
SadeaResult sadea_score(const DecisionMatrix& m, std::size_t dmu,
                        const SadeaOptions& opts) {
    if (dmu >= m.alternatives())
        throw std::out_of_range("dmu index out of range");
    m.ensure_valid();

    const NormalizedMatrix norm = normalize(m);
    const DecisionMatrix& nm = norm.matrix();
    const std::size_t ni = nm.inputs();
    const std::size_t no = nm.outputs();

    SadeaResult res;
    res.dmu = dmu;

    LinearProgram lp(true);
    int alpha = lp.add_free_variable(1.0);
    int w = lp.add_free_variable(0.0);
    int lambda = lp.add_variable(0.0);
    std::vector<int> xbar(ni), ybar(no);
    for (std::size_t k = 0; k < ni; ++k)
        xbar[k] = lp.add_variable(0.0, {0.0, nm.input(dmu, k)});
    for (std::size_t r = 0; r < no; ++r) {
        double yp = nm.output(dmu, r);
        if (yp >= 1.0 - kDegenerateEps) {
            res.degenerate_outputs.push_back(r);
            ybar[r] = lp.add_variable(0.0, {1.0, 1.0});
        } else {
            ybar[r] = lp.add_variable(0.0, {yp, 1.0});
        }
    }

    const int nv = lp.num_variables();
    for (std::size_t k = 0; k < ni; ++k) {
        std::vector<double> row(nv, 0.0);
        row[lambda] = nm.input(dmu, k);
        row[xbar[k]] = -1.0;
        row[w] = -1.0;
        lp.add_constraint(std::move(row), Relation::LessEq, 0.0);
    }
    for (std::size_t r = 0; r < no; ++r) {
        std::vector<double> row(nv, 0.0);
        row[ybar[r]] = 1.0;
        row[lambda] = -nm.output(dmu, r);
        row[w] = -1.0;
        lp.add_constraint(std::move(row), Relation::LessEq, 0.0);
    }
    for (std::size_t k = 0; k < ni; ++k) {
        double xp = nm.input(dmu, k);
        std::vector<double> row(nv, 0.0);
        if (opts.direction == MembershipDirection::Corrected) {
            // alpha <= (xp - xbar) / xp
            row[alpha] = xp;
            row[xbar[k]] = 1.0;
            lp.add_constraint(std::move(row), Relation::LessEq, xp);
        } else {
            // alpha <= xbar / xp
            row[alpha] = xp;
            row[xbar[k]] = -1.0;
            lp.add_constraint(std::move(row), Relation::LessEq, 0.0);
        }
    }
    for (std::size_t r = 0; r < no; ++r) {
        double yp = nm.output(dmu, r);
        if (yp >= 1.0 - kDegenerateEps) continue; // grade is identically 1
        // alpha <= (ybar - yp) / (1 - yp)
        std::vector<double> row(nv, 0.0);
        row[alpha] = 1.0 - yp;
        row[ybar[r]] = -1.0;
        lp.add_constraint(std::move(row), Relation::LessEq, -yp);
    }
    {
        std::vector<double> row(nv, 0.0);
        row[alpha] = 1.0;
        row[w] = 1.0;
        lp.add_constraint(std::move(row), Relation::LessEq, 1.0);
    }

    LpSolution sol = solve(lp, opts.lp);
    if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("self-assessment program did not solve");

    res.alpha = sol.values[alpha];
    res.score = std::clamp(1.0 - res.alpha, 0.0, 1.0);
    res.lambda = sol.values[lambda];
    res.input_point.resize(ni);
    for (std::size_t k = 0; k < ni; ++k) res.input_point[k] = sol.values[xbar[k]];
    res.output_point.resize(no);
    for (std::size_t r = 0; r < no; ++r) res.output_point[r] = sol.values[ybar[r]];
    return res;
}

std::vector<SadeaResult> sadea_all(const DecisionMatrix& m,
                                   const SadeaOptions& opts) {
    m.ensure_valid();
    const std::size_t n = m.alternatives();
    std::vector<SadeaResult> results(n);

    int jobs = std::max(1, opts.jobs);
    jobs = static_cast<int>(std::min<std::size_t>(jobs, n));
    if (jobs <= 1) {
        for (std::size_t p = 0; p < n; ++p) results[p] = sadea_score(m, p, opts);
        return results;
    }

    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t p = t; p < n; p += jobs) {
                try {
                    results[p] = sadea_score(m, p, opts);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : workers) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

Ranking sadea_rank(const DecisionMatrix& m, const SadeaOptions& opts) {
    auto results = sadea_all(m, opts);
    std::vector<std::string> names;
    std::vector<double> scores;
    for (std::size_t j = 0; j < m.alternatives(); ++j) {
        names.push_back(m.name(j));
        scores.push_back(results[j].score);
    }
    return make_ranking("sadea", RankOrder::LowerBetter, names, scores);
}

} // namespace dearank
