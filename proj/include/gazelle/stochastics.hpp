#pragma once

#include "gazelle/core.hpp"
#include "gazelle/rng.hpp"

namespace gazelle {

/// Step-control factor CF.
///
/// `rising` is (t/T)^(2t/T), which dips to ~0.48 around t/T = 1/e and
/// returns to 1; `decaying` is (1 - t/T)^(2t/T), the form used by the
/// marine-predators lineage, which falls to 0. Both stay in [0, 1].
enum class CfVariant { rising, decaying };

/// Exponent of the Brownian tuning factor (1 - t/T)^e. The one_over_T
/// reading keeps the factor ~1 for nearly the whole run; t_over_T makes it
/// decay to 0 at t = T and is the default.
enum class AptsBrownianExponent { t_over_T, one_over_T };

/// Parameters of the Mantegna Levy-step generator.
struct LevyParams {
    double alpha = 1.5;
    double scale = 0.05;
    double sigma_z = 0.0;  // derived from alpha; see make()

    /// Builds params with sigma_z = mantegna_sigma(alpha).
    /// Requires 0 < alpha <= 2 (alpha = 2 is degenerate: sigma_z ~ 0).
    static LevyParams make(double alpha = 1.5, double scale = 0.05);
};

/// Mantegna constant
///   sigma_z = [ G(1+a) sin(pi a/2) / ( G((1+a)/2) a 2^((a-1)/2) ) ]^(1/a)
/// with G the gamma function. Throws std::invalid_argument unless 0 < a <= 2.
double mantegna_sigma(double alpha);

/// d independent N(0,1) draws. Consumes d normal draws in index order.
Vec brownian_vector(RngStream& rng, int d);

/// d Mantegna Levy steps, scale * z / |y|^(1/alpha) with z ~ N(0, sigma_z^2),
/// y ~ N(0,1). Per component: z first, then y (y redrawn if exactly zero).
Vec levy_vector(RngStream& rng, int d, const LevyParams& params);

/// CF for iteration t of T (1-based, t in 1..T).
double cf_factor(int t, int T, CfVariant variant);

/// Brownian tuning factor (1 - t/T)^(t/T) (or ^(1/T) for the literal reading).
double apts_brownian_factor(int t, int T,
                            AptsBrownianExponent exponent = AptsBrownianExponent::t_over_T);

/// Levy adjustment factor (1 - t/T); linear, zero at t = T.
double apts_levy_factor(int t, int T);

/// Componentwise scaling of a Brownian motion vector by the tuning factor.
Vec apts_scale_brownian(Vec rb, int t, int T,
                        AptsBrownianExponent exponent = AptsBrownianExponent::t_over_T);

/// Componentwise scaling of a Levy motion vector by (1 - t/T).
Vec apts_scale_levy(Vec rl, int t, int T);

}  // namespace gazelle
