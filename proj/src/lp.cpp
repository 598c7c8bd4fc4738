#include "dearank/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dearank {

int LinearProgram::add_variable(double cost, VariableBounds b) {
    objective.push_back(cost);
    bounds.push_back(b);
    return num_variables() - 1;
}

int LinearProgram::add_free_variable(double cost) {
    return add_variable(cost, {std::nullopt, std::nullopt});
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation rel,
                                   double rhs) {
    constraints.push_back({std::move(coeffs), rel, rhs});
}

namespace {

// How an original variable maps onto the nonnegative internal ones:
//   x = shift + sign * u[col]            (single internal column)
//   x = u[col] - u[neg_col]              (free variable, split)
struct VarMap {
    int col = -1;
    int neg_col = -1;
    double shift = 0.0;
    double sign = 1.0;
};

struct Row {
    std::vector<double> coeffs;
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

void validate(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    if (lp.bounds.size() != n)
        throw std::invalid_argument("lp: bounds count does not match variables");
    for (double c : lp.objective)
        if (!std::isfinite(c)) throw std::invalid_argument("lp: non-finite objective");
    for (const auto& b : lp.bounds) {
        if (b.lower && !std::isfinite(*b.lower))
            throw std::invalid_argument("lp: non-finite lower bound");
        if (b.upper && !std::isfinite(*b.upper))
            throw std::invalid_argument("lp: non-finite upper bound");
        if (b.lower && b.upper && *b.lower > *b.upper)
            throw std::invalid_argument("lp: lower bound exceeds upper bound");
    }
    for (const auto& c : lp.constraints) {
        if (c.coeffs.size() != n)
            throw std::invalid_argument("lp: constraint width does not match variables");
        if (!std::isfinite(c.rhs))
            throw std::invalid_argument("lp: non-finite constraint rhs");
        for (double a : c.coeffs)
            if (!std::isfinite(a))
                throw std::invalid_argument("lp: non-finite constraint coefficient");
    }
}

class Simplex {
public:
    Simplex(const LinearProgram& lp, const LpOptions& opts)
        : lp_(lp), opts_(opts) {}

    LpSolution solve();

private:
    const LinearProgram& lp_;
    const LpOptions& opts_;

    std::vector<VarMap> maps_;
    std::vector<Row> rows_;
    int structurals_ = 0; // internal columns carrying original variables

    // tableau
    int cols_ = 0;
    std::vector<std::vector<double>> t_;
    std::vector<double> b_;
    std::vector<int> basis_;
    std::vector<bool> banned_;
    int iterations_ = 0;

    void build_internal();
    void build_tableau();
    void compute_reduced(const std::vector<double>& cost, std::vector<double>& r) const;
    void pivot(int pr, int pc, std::vector<double>& r);
    // Bland's rule iteration; returns false when unbounded.
    bool iterate(std::vector<double>& r);
    double phase_objective(const std::vector<double>& cost) const;
    void drive_out_artificials(int first_artificial, std::vector<double>& r);
    std::vector<double> recover() const;
};

void Simplex::build_internal() {
    const int n = lp_.num_variables();
    maps_.resize(n);
    for (int k = 0; k < n; ++k) {
        const auto& bd = lp_.bounds[k];
        VarMap& vm = maps_[k];
        if (bd.lower) {
            vm.col = structurals_++;
            vm.shift = *bd.lower;
            vm.sign = 1.0;
            if (bd.upper) {
                Row r;
                r.coeffs.assign(lp_.num_variables(), 0.0);
                r.coeffs[k] = 1.0;
                r.rel = Relation::LessEq;
                r.rhs = *bd.upper;
                rows_.push_back(std::move(r));
            }
        } else if (bd.upper) {
            vm.col = structurals_++;
            vm.shift = *bd.upper;
            vm.sign = -1.0;
        } else {
            vm.col = structurals_++;
            vm.neg_col = structurals_++;
        }
    }
    for (const auto& c : lp_.constraints)
        rows_.push_back({c.coeffs, c.rel, c.rhs});

    // substitute the variable maps into every row
    for (auto& row : rows_) {
        std::vector<double> internal(structurals_, 0.0);
        double rhs = row.rhs;
        for (int k = 0; k < lp_.num_variables(); ++k) {
            double a = row.coeffs[k];
            if (a == 0.0) continue;
            const VarMap& vm = maps_[k];
            internal[vm.col] += a * vm.sign;
            if (vm.neg_col >= 0) internal[vm.neg_col] -= a;
            rhs -= a * vm.shift;
        }
        row.coeffs = std::move(internal);
        row.rhs = rhs;
        if (row.rhs < 0.0) {
            for (double& a : row.coeffs) a = -a;
            row.rhs = -row.rhs;
            if (row.rel == Relation::LessEq)
                row.rel = Relation::GreaterEq;
            else if (row.rel == Relation::GreaterEq)
                row.rel = Relation::LessEq;
        }
    }
}

void Simplex::build_tableau() {
    const int m = static_cast<int>(rows_.size());
    int slacks = 0, artificials = 0;
    for (const auto& r : rows_) {
        if (r.rel != Relation::Equal) ++slacks;
        if (r.rel != Relation::LessEq) ++artificials;
    }
    cols_ = structurals_ + slacks + artificials;
    t_.assign(m, std::vector<double>(cols_, 0.0));
    b_.assign(m, 0.0);
    basis_.assign(m, -1);
    banned_.assign(cols_, false);

    int next_slack = structurals_;
    int next_art = structurals_ + slacks;
    for (int i = 0; i < m; ++i) {
        const Row& r = rows_[i];
        for (int j = 0; j < structurals_; ++j) t_[i][j] = r.coeffs[j];
        b_[i] = r.rhs;
        switch (r.rel) {
            case Relation::LessEq:
                t_[i][next_slack] = 1.0;
                basis_[i] = next_slack++;
                break;
            case Relation::GreaterEq:
                t_[i][next_slack] = -1.0;
                ++next_slack;
                t_[i][next_art] = 1.0;
                basis_[i] = next_art++;
                break;
            case Relation::Equal:
                t_[i][next_art] = 1.0;
                basis_[i] = next_art++;
                break;
        }
    }
}

void Simplex::compute_reduced(const std::vector<double>& cost,
                              std::vector<double>& r) const {
    r = cost;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        double cb = cost[basis_[i]];
        if (cb == 0.0) continue;
        for (int j = 0; j < cols_; ++j) r[j] -= cb * t_[i][j];
    }
}

void Simplex::pivot(int pr, int pc, std::vector<double>& r) {
    double p = t_[pr][pc];
    for (int j = 0; j < cols_; ++j) t_[pr][j] /= p;
    b_[pr] /= p;
    if (b_[pr] < 0.0 && b_[pr] > -opts_.feas_tol) b_[pr] = 0.0;
    t_[pr][pc] = 1.0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        if (static_cast<int>(i) == pr) continue;
        double f = t_[i][pc];
        if (f == 0.0) continue;
        for (int j = 0; j < cols_; ++j) t_[i][j] -= f * t_[pr][j];
        t_[i][pc] = 0.0;
        b_[i] -= f * b_[pr];
        if (b_[i] < 0.0 && b_[i] > -opts_.feas_tol) b_[i] = 0.0;
    }
    double f = r[pc];
    if (f != 0.0) {
        for (int j = 0; j < cols_; ++j) r[j] -= f * t_[pr][j];
        r[pc] = 0.0;
    }
    basis_[pr] = pc;
}

bool Simplex::iterate(std::vector<double>& r) {
    const int m = static_cast<int>(t_.size());
    for (;;) {
        if (++iterations_ > opts_.max_iterations)
            throw std::runtime_error("simplex iteration limit exceeded");
        int pc = -1;
        for (int j = 0; j < cols_; ++j) {
            if (banned_[j]) continue;
            if (r[j] < -opts_.pivot_tol) { pc = j; break; }
        }
        if (pc < 0) return true; // optimal
        int pr = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < m; ++i) {
            if (t_[i][pc] <= opts_.pivot_tol) continue;
            double ratio = b_[i] / t_[i][pc];
            if (pr < 0 || ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[pr])) {
                pr = i;
                best_ratio = ratio;
            }
        }
        if (pr < 0) return false; // unbounded in direction pc
        pivot(pr, pc, r);
    }
}

double Simplex::phase_objective(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) v += cost[basis_[i]] * b_[i];
    return v;
}

void Simplex::drive_out_artificials(int first_artificial, std::vector<double>& r) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] < first_artificial) continue;
        int pc = -1;
        for (int j = 0; j < first_artificial; ++j) {
            if (std::fabs(t_[i][j]) > opts_.pivot_tol) { pc = j; break; }
        }
        // a row with no structural coefficient left is redundant; its
        // artificial stays basic at level zero and is banned from moving
        if (pc >= 0) pivot(static_cast<int>(i), pc, r);
    }
}

std::vector<double> Simplex::recover() const {
    std::vector<double> u(cols_, 0.0);
    for (std::size_t i = 0; i < basis_.size(); ++i) u[basis_[i]] = b_[i];
    std::vector<double> x(lp_.num_variables(), 0.0);
    for (int k = 0; k < lp_.num_variables(); ++k) {
        const VarMap& vm = maps_[k];
        double v = vm.shift + vm.sign * u[vm.col];
        if (vm.neg_col >= 0) v -= u[vm.neg_col];
        x[k] = v;
    }
    return x;
}

LpSolution Simplex::solve() {
    build_internal();
    build_tableau();

    const int m = static_cast<int>(rows_.size());
    int artificial_count = 0;
    for (const auto& r : rows_)
        if (r.rel != Relation::LessEq) ++artificial_count;
    const int first_artificial = cols_ - artificial_count;

    double rhs_scale = 1.0;
    for (int i = 0; i < m; ++i) rhs_scale = std::max(rhs_scale, std::fabs(b_[i]));

    std::vector<double> reduced;
    if (artificial_count > 0) {
        std::vector<double> phase1(cols_, 0.0);
        for (int j = first_artificial; j < cols_; ++j) phase1[j] = 1.0;
        compute_reduced(phase1, reduced);
        if (!iterate(reduced))
            throw std::runtime_error("phase-1 simplex reported unbounded");
        if (phase_objective(phase1) > opts_.feas_tol * rhs_scale)
            return {LpStatus::Infeasible, 0.0, {}};
        drive_out_artificials(first_artificial, reduced);
        for (int j = first_artificial; j < cols_; ++j) banned_[j] = true;
    }

    std::vector<double> phase2(cols_, 0.0);
    for (int k = 0; k < lp_.num_variables(); ++k) {
        double c = lp_.maximize ? -lp_.objective[k] : lp_.objective[k];
        const VarMap& vm = maps_[k];
        phase2[vm.col] += c * vm.sign;
        if (vm.neg_col >= 0) phase2[vm.neg_col] -= c;
    }
    compute_reduced(phase2, reduced);
    if (!iterate(reduced)) return {LpStatus::Unbounded, 0.0, {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.values = recover();
    sol.objective_value = 0.0;
    for (int k = 0; k < lp_.num_variables(); ++k)
        sol.objective_value += lp_.objective[k] * sol.values[k];
    return sol;
}

void check_solution(const LinearProgram& lp, const LpOptions& opts,
                    const LpSolution& sol) {
    auto slack = [&](double v) { return opts.feas_tol * (1.0 + std::fabs(v)) * 10.0; };
    for (int k = 0; k < lp.num_variables(); ++k) {
        const auto& b = lp.bounds[k];
        double v = sol.values[k];
        if (b.lower && v < *b.lower - slack(*b.lower))
            throw std::runtime_error("simplex solution violates a lower bound");
        if (b.upper && v > *b.upper + slack(*b.upper))
            throw std::runtime_error("simplex solution violates an upper bound");
    }
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (int k = 0; k < lp.num_variables(); ++k) lhs += c.coeffs[k] * sol.values[k];
        switch (c.rel) {
            case Relation::LessEq:
                if (lhs > c.rhs + slack(c.rhs))
                    throw std::runtime_error("simplex solution violates a <= row");
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs - slack(c.rhs))
                    throw std::runtime_error("simplex solution violates a >= row");
                break;
            case Relation::Equal:
                if (std::fabs(lhs - c.rhs) > slack(c.rhs))
                    throw std::runtime_error("simplex solution violates an = row");
                break;
        }
    }
}

} // namespace

LpSolution solve(const LinearProgram& lp, const LpOptions& opts) {
    validate(lp);
    Simplex s(lp, opts);
    LpSolution sol = s.solve();
    if (sol.status == LpStatus::Optimal) check_solution(lp, opts, sol);
    return sol;
}

} // namespace dearank
