#pragma once

#include <optional>
#include <vector>

namespace dearank {

enum class Relation { LessEq, GreaterEq, Equal };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
    std::vector<double> coeffs; // one per variable, dense
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

/// Per-variable bounds; nullopt means unbounded on that side.
struct VariableBounds {
    std::optional<double> lower = 0.0;
    std::optional<double> upper = std::nullopt;
};

/// Dense linear program built incrementally: add variables (each with an
/// objective coefficient and bounds), then rows. Variables default to >= 0;
/// free and box-bounded variables are supported directly.
struct LinearProgram {
    bool maximize = false;
    std::vector<double> objective;
    std::vector<VariableBounds> bounds;
    std::vector<LpConstraint> constraints;

    explicit LinearProgram(bool maximize_objective = false)
        : maximize(maximize_objective) {}

    int add_variable(double cost, VariableBounds b = {});
    int add_free_variable(double cost);
    void add_constraint(std::vector<double> coeffs, Relation rel, double rhs);
    int num_variables() const { return static_cast<int>(objective.size()); }
};

struct LpOptions {
    double pivot_tol = 1e-9; // entries below this are treated as zero pivots
    double feas_tol = 1e-7;  // phase-1 residual / solution check tolerance
    int max_iterations = 50000;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective_value = 0.0;
    std::vector<double> values; // one per variable; empty unless Optimal
};

/// Two-phase primal simplex with Bland's rule (deterministic, cycle-free).
/// Throws std::invalid_argument on malformed input (dimension mismatch,
/// non-finite data, inverted bounds) and std::runtime_error if the iteration
/// cap is hit.
LpSolution solve(const LinearProgram& lp, const LpOptions& opts = {});

} // namespace dearank
