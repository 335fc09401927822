#pragma once

#include <string>
#include <vector>

#include "gazelle/core.hpp"

namespace gazelle {

// Classic analytic test functions, each on its conventional box with the
// documented optimum recorded in the returned Problem.

Problem sphere_problem(std::size_t d);
Problem rosenbrock_problem(std::size_t d);
Problem rastrigin_problem(std::size_t d);
Problem ackley_problem(std::size_t d);
Problem griewank_problem(std::size_t d);
Problem schwefel226_problem(std::size_t d);
Problem levy_problem(std::size_t d);

/// Rastrigin composed with a fixed shift and a seeded random rotation
/// (regenerated deterministically per dimension); optimum 0 at the shift.
Problem rotated_rastrigin_problem(std::size_t d);

/// The eight classic functions above, in catalog order. Requires d >= 2.
std::vector<Problem> classic_suite(std::size_t d);

// Constrained engineering design problems (fixed dimension, quadratic
// penalty handling configured on the returned Problem).

/// Tension/compression spring, D=3, x = (wire diameter, coil diameter,
/// active coils). Four standard-form constraints; the commonly printed
/// variants with a x2*x3^3 denominator in g2 or a missing trailing -1 make
/// the known best solution non-optimal and are not used.
Problem spring_problem();

/// Pressure vessel, D=4, x = (shell thickness, head thickness, radius,
/// length), continuous thickness relaxation. The volume constraint is kept
/// in dimensionless form (scaled by 1296000) so the shared feasibility
/// tolerance is meaningful across constraints.
Problem pressure_vessel_problem();

/// Welded beam, D=4, x = (weld thickness h, weld length l, bar height t,
/// bar thickness b). Standard constants P=6000, L=14, E=30e6, G=12e6,
/// tau_max=13600, sigma_max=30000, delta_max=0.25; torsion constant
/// J = 2*sqrt(2)*h*l*(l^2/4 + ((h+t)/2)^2). Stress/deflection/buckling
/// constraints are expressed relative to their limits.
Problem welded_beam_problem();

/// All catalog names addressable via make_problem.
const std::vector<std::string>& catalog_names();

/// True if the named problem has a fixed dimension (engineering problems).
bool catalog_fixed_dimension(const std::string& name);

/// Builds a catalog problem by name. `d` selects the dimension of scalable
/// problems and must be >= 2 for them; for fixed-dimension problems pass 0
/// (or the exact dimension). Throws std::invalid_argument listing valid
/// names for an unknown name.
Problem make_problem(const std::string& name, std::size_t d);

}  // namespace gazelle
