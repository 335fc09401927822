#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gazelle/core.hpp"
#include "gazelle/rng.hpp"

using namespace gazelle;

namespace {

// Toy constrained problem: minimize sum(x), subject to x0 <= 1 and x1 <= 2,
// with a small penalty coefficient so the quadratic shape is easy to check.
Problem toy_constrained() {
    Problem p;
    p.name = "toy";
    p.dimension = 2;
    p.bounds = Bounds::uniform_box(2, -10.0, 10.0);
    p.objective = [](const Vec& x) { return x[0] + x[1]; };
    p.constraints = {
        [](const Vec& x) { return x[0] - 1.0; },
        [](const Vec& x) { return x[1] - 2.0; },
    };
    p.penalty_coefficient = 2.0;
    p.feasibility_tolerance = 0.0;
    return p;
}

}  // namespace

TEST_CASE("Bounds validates shape and ordering") {
    CHECK_THROWS_AS(Bounds({1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({0.0, 0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Bounds({}, {}), std::invalid_argument);
    const Bounds b = Bounds::uniform_box(3, -1.0, 1.0);
    CHECK(b.dimension() == 3);
}

TEST_CASE("clamp projects coordinatewise and is idempotent") {
    const Bounds b({0.0, 0.0}, {1.0, 2.0});
    CHECK(clamp({0.5, 1.5}, b) == Vec{0.5, 1.5});
    CHECK(clamp({2.0, 1.0}, b) == Vec{1.0, 1.0});
    CHECK(clamp({-5.0, 1.0}, b) == Vec{0.0, 1.0});

    RngStream rng(11);
    for (int i = 0; i < 200; ++i) {
        const Vec x{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Vec once = clamp(x, b);
        CHECK(clamp(once, b) == once);
        CHECK(once[0] >= 0.0);
        CHECK(once[0] <= 1.0);
    }
}

TEST_CASE("evaluate returns the raw objective for feasible points") {
    const Problem p = toy_constrained();
    RngStream rng(3);
    for (int i = 0; i < 200; ++i) {
        const Vec x{rng.uniform(-10.0, 1.0), rng.uniform(-10.0, 2.0)};
        CHECK(evaluate(p, x) == p.objective(x));  // exactly, no penalty term
        CHECK(constraint_penalty(p, x) == 0.0);
    }
}

TEST_CASE("evaluate adds the quadratic penalty for violations") {
    const Problem p = toy_constrained();
    const Vec x{1.5, 3.0};  // violations 0.5 and 1.0
    const double expected = (1.5 + 3.0) + 2.0 * (0.5 * 0.5 + 1.0 * 1.0);
    CHECK(evaluate(p, x) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(constraint_violation(p, x) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("feasibility tolerance absorbs sub-tolerance violations exactly") {
    Problem p = toy_constrained();
    p.feasibility_tolerance = 1e-6;
    CHECK(constraint_penalty(p, {1.0 + 5e-7, 0.0}) == 0.0);
    CHECK(constraint_penalty(p, {1.0 + 2e-6, 0.0}) > 0.0);
}

TEST_CASE("evaluate rejects dimension mismatches") {
    const Problem p = toy_constrained();
    CHECK_THROWS_AS(evaluate(p, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(p, {1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("evaluate reports non-finite objectives by problem name") {
    Problem p;
    p.name = "exploding";
    p.dimension = 1;
    p.bounds = Bounds::uniform_box(1, -1.0, 1.0);
    p.objective = [](const Vec&) { return std::numeric_limits<double>::quiet_NaN(); };
    try {
        evaluate(p, {0.0});
        FAIL("expected an evaluation error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("exploding") != std::string::npos);
    }
}
