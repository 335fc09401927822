#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gazelle {

using Vec = std::vector<double>;

/// Per-dimension box limits of the search space.
struct Bounds {
    Vec lower;
    Vec upper;

    Bounds() = default;
    Bounds(Vec lo, Vec up);  // validates lo[j] <= up[j], equal nonzero lengths

    std::size_t dimension() const { return lower.size(); }

    static Bounds uniform_box(std::size_t d, double lo, double hi);
};

/// A candidate solution with its cached objective value (lower is better).
struct Agent {
    Vec position;
    double fitness = std::numeric_limits<double>::infinity();
};

/// The swarm plus the best-so-far copy. `elite` is never replaced by a
/// worse agent, so its fitness is monotone non-increasing over a run.
struct Population {
    std::vector<Agent> agents;
    Agent elite;
};

/// A minimization problem: objective on a box, optional inequality
/// constraints g_k(x) <= 0 handled by a static quadratic penalty.
///
/// Penalized value: f(x) + penalty_coefficient * sum_k max(0, g_k(x) - feasibility_tolerance)^2.
/// The tolerance absorbs violations at the scale of printed reference
/// solutions (active constraints evaluated from rounded decimal digits);
/// any x with all g_k <= 0 is penalized by exactly zero.
struct Problem {
    std::string name;
    std::size_t dimension = 0;
    Bounds bounds;
    std::function<double(const Vec&)> objective;
    std::vector<std::function<double(const Vec&)>> constraints;
    double penalty_coefficient = 1e10;
    double feasibility_tolerance = 1e-6;

    // Known global optimum, when documented, for assertions and reports.
    std::optional<double> optimum_value;
    std::optional<Vec> optimum_position;
};

/// Objective plus quadratic constraint penalty. Throws std::invalid_argument
/// on dimension mismatch and std::runtime_error (naming the problem) if the
/// objective produces a non-finite value.
double evaluate(const Problem& problem, const Vec& position);

/// Penalty term alone (0 for feasible points).
double constraint_penalty(const Problem& problem, const Vec& position);

/// Sum of positive parts of the constraint values, ignoring the tolerance.
/// Zero iff the point is strictly feasible.
double constraint_violation(const Problem& problem, const Vec& position);

/// Coordinate-wise projection into the box. Idempotent.
Vec clamp(Vec position, const Bounds& bounds);

/// Best penalized objective after each iteration; monotone non-increasing.
struct ConvergenceTrace {
    Vec best_so_far;
};

/// Final outcome of one run.
struct RunRecord {
    Agent best;
    std::uint64_t seed = 0;
    long evaluations = 0;
};

}  // namespace gazelle
