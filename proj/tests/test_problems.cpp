#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gazelle/problems.hpp"

using namespace gazelle;

TEST_CASE("classic suite evaluates its documented optimum to 1e-10") {
    for (std::size_t d : {2u, 10u, 30u}) {
        for (const auto& problem : classic_suite(d)) {
            REQUIRE(problem.optimum_value.has_value());
            REQUIRE(problem.optimum_position.has_value());
            const double at_opt = problem.objective(*problem.optimum_position);
            CHECK_MESSAGE(std::fabs(at_opt - *problem.optimum_value) <= 1e-10,
                          problem.name << " at d=" << d << ": " << at_opt);
            CHECK(problem.dimension == d);
            CHECK(problem.bounds.dimension() == d);
        }
    }
    CHECK(classic_suite(10).size() == 8);
    CHECK_THROWS_AS(classic_suite(1), std::invalid_argument);
}

TEST_CASE("individual classic definitions") {
    const auto sphere = sphere_problem(4);
    CHECK(sphere.objective({0, 0, 0, 0}) == 0.0);
    CHECK(sphere.objective({1, 2, 3, 4}) == 30.0);

    const auto rastrigin = rastrigin_problem(3);
    CHECK(rastrigin.objective({0, 0, 0}) == 0.0);

    const auto ackley = ackley_problem(5);
    CHECK(std::fabs(ackley.objective(Vec(5, 0.0))) <= 1e-12);

    const auto rosenbrock = rosenbrock_problem(2);
    CHECK(rosenbrock.objective({1.0, 1.0}) == 0.0);
    CHECK(rosenbrock.objective({0.0, 0.0}) == 1.0);

    const auto griewank = griewank_problem(2);
    CHECK(griewank.objective({0.0, 0.0}) == 0.0);
}

TEST_CASE("rotated rastrigin instance is orthogonal and reproducible") {
    const auto a = rotated_rastrigin_problem(6);
    const auto b = rotated_rastrigin_problem(6);
    REQUIRE(a.optimum_position.has_value());
    // optimum at the shift, exactly 0
    CHECK(std::fabs(a.objective(*a.optimum_position)) <= 1e-10);
    // the same shipped instance every time
    CHECK(*a.optimum_position == *b.optimum_position);
    CHECK(a.objective({1, 2, 3, -1, -2, 0}) == b.objective({1, 2, 3, -1, -2, 0}));
    // rotation preserves lengths, so values match plain rastrigin's range
    CHECK(a.objective(*a.optimum_position) >= 0.0);
}

TEST_CASE("catalog lookup and error reporting") {
    CHECK(catalog_names().size() == 11);
    CHECK_FALSE(catalog_fixed_dimension("sphere"));
    CHECK(catalog_fixed_dimension("spring"));
    const auto p = make_problem("rastrigin", 12);
    CHECK(p.dimension == 12);
    try {
        make_problem("nosuch", 10);
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        const std::string message = e.what();
        CHECK(message.find("nosuch") != std::string::npos);
        CHECK(message.find("sphere") != std::string::npos);  // lists valid names
    }
    CHECK_THROWS_AS(make_problem("spring", 7), std::invalid_argument);
    CHECK(make_problem("spring", 3).dimension == 3);
    CHECK(make_problem("spring", 0).dimension == 3);
}

TEST_CASE("spring design problem") {
    const auto spring = spring_problem();
    CHECK(spring.dimension == 3);
    CHECK(spring.constraints.size() == 4);

    // best-known solution: objective reproduced, zero penalty
    const Vec best{0.05168906, 0.35671774, 11.288965};
    CHECK(spring.objective(best) == doctest::Approx(0.01266523).epsilon(1e-4));
    CHECK(std::fabs(spring.objective(best) - 0.01266523) <= 1e-6);
    CHECK(constraint_penalty(spring, best) == 0.0);
    CHECK(evaluate(spring, best) == spring.objective(best));
    // the active constraints are satisfied only up to print precision
    CHECK(constraint_violation(spring, best) < 1e-6);

    // objective form is exact
    const Vec x{0.1, 0.5, 7.0};
    CHECK(spring.objective(x) == (7.0 + 2.0) * 0.5 * 0.1 * 0.1);

    // corner of the box violates the surge-frequency constraint
    const Vec corner{0.05, 0.25, 2.0};
    CHECK(spring.constraints[0](corner) > 0.0);
    CHECK(evaluate(spring, corner) > spring.objective(corner));
}

TEST_CASE("pressure vessel design problem") {
    const auto vessel = pressure_vessel_problem();
    CHECK(vessel.dimension == 4);

    const Vec best{0.77816864, 0.38464916, 40.3196187, 200.0};
    CHECK(std::fabs(vessel.objective(best) - 5885.33277) <= 0.01);
    CHECK(constraint_penalty(vessel, best) == 0.0);
    // thickness constraint is active at the optimum
    CHECK(std::fabs(-best[0] + 0.0193 * best[2]) <= 1e-4);

    Vec long_vessel = best;
    long_vessel[3] = 241.0;
    CHECK(vessel.constraints[3](long_vessel) > 0.0);

    // shrinking the radius starves the required volume
    Vec small = best;
    small[2] = 30.0;
    CHECK(vessel.constraints[2](small) > 0.0);
    CHECK(evaluate(vessel, small) > vessel.objective(small));
}

TEST_CASE("welded beam design problem") {
    const auto beam = welded_beam_problem();
    CHECK(beam.dimension == 4);
    CHECK(beam.constraints.size() == 5);

    // objective form is exact
    const Vec x{0.3, 4.0, 8.0, 0.4};
    CHECK(beam.objective(x) ==
          doctest::Approx(1.10471 * 0.09 * 4.0 + 0.04811 * 8.0 * 0.4 * 18.0).epsilon(1e-15));

    // reported best value reproduced at the reference point
    const Vec reference{0.2057296, 3.2349193, 9.0366239, 0.2057296};
    CHECK(std::fabs(beam.objective(reference) - 1.6927682) <= 1e-5);
    // ... but that point overdrives the shear constraint by ~0.5% under the
    // standard formulation (its value is below the constrained optimum
    // 1.6952467); pinned here so the discrepancy stays visible.
    CHECK(beam.constraints[3](reference) ==
          doctest::Approx(0.0050719502640839).epsilon(1e-9));
    CHECK(constraint_penalty(beam, reference) > 0.0);

    // a strictly feasible near-optimal point evaluates with zero penalty
    const Vec feasible{0.2057, 3.2545, 9.0375, 0.20585};
    CHECK(constraint_violation(beam, feasible) == 0.0);
    CHECK(evaluate(beam, feasible) == beam.objective(feasible));
    CHECK(beam.objective(feasible) == doctest::Approx(1.69644).epsilon(1e-4));

    // weld thicker than the bar is infeasible
    Vec thick = feasible;
    thick[0] = thick[3] + 0.1;
    CHECK(beam.constraints[0](thick) > 0.0);
}

TEST_CASE("problems are pure functions of the position") {
    for (const auto& name : catalog_names()) {
        const auto problem = make_problem(name, catalog_fixed_dimension(name) ? 0 : 6);
        Vec mid(problem.dimension);
        for (std::size_t j = 0; j < problem.dimension; ++j) {
            mid[j] = 0.5 * (problem.bounds.lower[j] + problem.bounds.upper[j]);
        }
        CHECK(evaluate(problem, mid) == evaluate(problem, mid));
    }
}
