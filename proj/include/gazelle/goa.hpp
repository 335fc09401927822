#pragma once

#include <utility>

#include "gazelle/config.hpp"
#include "gazelle/core.hpp"
#include "gazelle/rng.hpp"
#include "gazelle/stochastics.hpp"

namespace gazelle {

/// Per-iteration scaling applied to freshly drawn motion vectors.
/// Both factors are 1 unless the adaptive tuning strategy is active.
struct MotionScale {
    double brownian = 1.0;
    double levy = 1.0;
};

/// Sign of the escape direction: +1 on odd iterations, -1 on even ones.
inline double mu_sign(int t) { return (t % 2 == 1) ? 1.0 : -1.0; }

// --- Pure update rules -------------------------------------------------
//
// The random inputs are explicit arguments so the rules can be checked
// against independently recomputed values. The *_step wrappers below draw
// them in the documented order.

/// Grazing move: x + s * ru .* rb .* (elite - rb .* x).
Vec exploit_move(const Vec& x, const Vec& elite, const Vec& ru, const Vec& rb, double s);

/// Levy escape move: x + s * mu * ru .* rl .* (elite - rl .* x).
Vec explore_levy_move(const Vec& x, const Vec& elite, const Vec& ru, const Vec& rl, double s,
                      int t);

/// Predator-following move: elite + s * mu * cf * rb .* (rl .* elite - x).
Vec explore_brownian_move(const Vec& x, const Vec& elite, const Vec& rb, const Vec& rl, double s,
                          int t, double cf);

/// Late-phase local move: elite + s * mu * cf * rl .* (rl .* elite - x),
/// with a single Levy vector used in both positions.
Vec exploit_levy_move(const Vec& x, const Vec& elite, const Vec& rl, double s, int t, double cf);

/// Escape, uniform-jump branch: x + cf * mask .* jump, where jump is a
/// fresh uniform point of the box.
Vec escape_jump_move(const Vec& x, const Vec& mask, const Vec& jump, double cf);

/// Escape, drift branch: x + (psr * (1 - r1) + r1) * (xa - xb).
Vec escape_drift_move(const Vec& x, const Vec& xa, const Vec& xb, double r1, double psr);

// --- Stochastic step operations ----------------------------------------
//
// Draw order per step (D = dimension):
//   exploit_step:          D uniforms (ru), then D normals (rb)
//   explore_levy_step:     D uniforms (ru), then D Levy components
//                          (per component: z normal, then y normal)
//   explore_brownian_step: D normals (rb), then D Levy components (rl)
//   exploit_levy_step:     D Levy components (rl)
// Motion vectors are multiplied by the matching MotionScale factor right
// after being drawn.

Vec exploit_step(const Agent& agent, const Agent& elite, RngStream& rng, const GoaParams& params,
                 int t, int T, const MotionScale& scale = {});

Vec explore_levy_step(const Agent& agent, const Agent& elite, RngStream& rng,
                      const GoaParams& params, int t, int T, const MotionScale& scale = {});

Vec explore_brownian_step(const Agent& agent, const Agent& elite, RngStream& rng,
                          const GoaParams& params, int t, int T, const MotionScale& scale = {});

Vec exploit_levy_step(const Agent& agent, const Agent& elite, RngStream& rng,
                      const GoaParams& params, int t, int T, const MotionScale& scale = {});

/// Uniform sampling of n agents in the box (agent-major, coordinate order),
/// all evaluated; elite set to the best. Requires n >= 2.
Population initialize(RngStream& rng, const Problem& problem, int n);

/// Predator-escape sweep over the whole population. Candidate positions are
/// computed from a snapshot of the pre-sweep positions, agents in index
/// order. Per agent: r2 (1 uniform); if r2 <= PSR, D uniforms for the
/// binary mask (entry 0 when the draw is < 0.34) then D uniforms for the
/// jump point; otherwise r1 (1 uniform) and two index draws selecting
/// distinct agents A then B (B drawn from the remaining n-1, shifted past
/// A). New positions are clamped, re-evaluated and overwrite the old ones
/// (no greedy test); the elite is refreshed afterwards. Returns the number
/// of objective evaluations. Requires at least 2 agents.
long escape_step(Population& pop, RngStream& rng, const GoaParams& params, int t, int T,
                 const Problem& problem);

/// Baseline update sweep: one uniform draw selects exploitation (all agents
/// graze) or exploration (first half Levy moves, second half
/// predator-following moves) for this iteration; each candidate is
/// clamped, evaluated and accepted only if strictly better. The elite used
/// as attractor is a snapshot taken at sweep entry; it is refreshed at the
/// end of the sweep. Returns the number of objective evaluations.
long goa_update_sweep(Population& pop, RngStream& rng, const GoaParams& params, int t, int T,
                      const Problem& problem, const MotionScale& scale = {});

/// Re-points pop.elite at the best agent if one improved on it.
void refresh_elite(Population& pop);

/// One full baseline run: T iterations of update sweep followed by escape
/// sweep, trace recording the elite after each iteration. Ignores
/// config.strategy (equivalent to running the variant engine with every
/// strategy off).
std::pair<RunRecord, ConvergenceTrace> run_goa(const Problem& problem, const RunConfig& config);

}  // namespace gazelle
