#include "gazelle/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gazelle {

Bounds::Bounds(Vec lo, Vec up) : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.empty() || lower.size() != upper.size()) {
        throw std::invalid_argument("Bounds: lower/upper must have equal nonzero length");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!(lower[j] <= upper[j])) {
            throw std::invalid_argument("Bounds: lower[" + std::to_string(j) + "] > upper[" +
                                        std::to_string(j) + "]");
        }
    }
}

Bounds Bounds::uniform_box(std::size_t d, double lo, double hi) {
    return Bounds(Vec(d, lo), Vec(d, hi));
}

double constraint_violation(const Problem& problem, const Vec& position) {
    double total = 0.0;
    for (const auto& g : problem.constraints) {
        total += std::max(0.0, g(position));
    }
    return total;
}

double constraint_penalty(const Problem& problem, const Vec& position) {
    double penalty = 0.0;
    for (const auto& g : problem.constraints) {
        const double v = std::max(0.0, g(position) - problem.feasibility_tolerance);
        penalty += v * v;
    }
    return problem.penalty_coefficient * penalty;
}

double evaluate(const Problem& problem, const Vec& position) {
    if (position.size() != problem.dimension) {
        throw std::invalid_argument("evaluate: position has dimension " +
                                    std::to_string(position.size()) + ", problem '" +
                                    problem.name + "' expects " +
                                    std::to_string(problem.dimension));
    }
    const double raw = problem.objective(position);
    if (!std::isfinite(raw)) {
        throw std::runtime_error("evaluate: objective of problem '" + problem.name +
                                 "' returned a non-finite value");
    }
    double value = raw;
    if (!problem.constraints.empty()) {
        value += constraint_penalty(problem, position);
    }
    if (!std::isfinite(value)) {
        throw std::runtime_error("evaluate: penalized value of problem '" + problem.name +
                                 "' is non-finite");
    }
    return value;
}

Vec clamp(Vec position, const Bounds& bounds) {
    if (position.size() != bounds.dimension()) {
        throw std::invalid_argument("clamp: position/bounds dimension mismatch");
    }
    for (std::size_t j = 0; j < position.size(); ++j) {
        position[j] = std::min(std::max(position[j], bounds.lower[j]), bounds.upper[j]);
    }
    return position;
}

}  // namespace gazelle
