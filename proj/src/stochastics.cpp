#include "gazelle/stochastics.hpp"

#include <cmath>
#include <stdexcept>

namespace gazelle {

namespace {

void check_iteration(int t, int T) {
    if (T < 1 || t < 1 || t > T) {
        throw std::invalid_argument("iteration t must satisfy 1 <= t <= T");
    }
}

}  // namespace

double mantegna_sigma(double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw std::invalid_argument("mantegna_sigma: alpha must be in (0, 2]");
    }
    const double num = std::tgamma(1.0 + alpha) * std::sin(M_PI * alpha / 2.0);
    const double den = std::tgamma((1.0 + alpha) / 2.0) * alpha * std::pow(2.0, (alpha - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / alpha);
}

LevyParams LevyParams::make(double alpha, double scale) {
    LevyParams p;
    p.alpha = alpha;
    p.scale = scale;
    p.sigma_z = mantegna_sigma(alpha);
    return p;
}

Vec brownian_vector(RngStream& rng, int d) {
    if (d < 1) {
        throw std::invalid_argument("brownian_vector: d must be >= 1");
    }
    Vec out(static_cast<std::size_t>(d));
    for (auto& v : out) {
        v = rng.normal();
    }
    return out;
}

Vec levy_vector(RngStream& rng, int d, const LevyParams& params) {
    if (d < 1) {
        throw std::invalid_argument("levy_vector: d must be >= 1");
    }
    Vec out(static_cast<std::size_t>(d));
    const double inv_alpha = 1.0 / params.alpha;
    for (auto& v : out) {
        const double z = params.sigma_z * rng.normal();
        double y = rng.normal();
        while (y == 0.0) {  // probability-zero guard; keeps |y|^(1/a) finite
            y = rng.normal();
        }
        v = params.scale * z / std::pow(std::fabs(y), inv_alpha);
    }
    return out;
}

double cf_factor(int t, int T, CfVariant variant) {
    check_iteration(t, T);
    const double u = static_cast<double>(t) / static_cast<double>(T);
    const double base = variant == CfVariant::rising ? u : 1.0 - u;
    return std::pow(base, 2.0 * u);
}

double apts_brownian_factor(int t, int T, AptsBrownianExponent exponent) {
    check_iteration(t, T);
    const double u = static_cast<double>(t) / static_cast<double>(T);
    const double e = exponent == AptsBrownianExponent::t_over_T ? u : 1.0 / static_cast<double>(T);
    return std::pow(1.0 - u, e);
}

double apts_levy_factor(int t, int T) {
    check_iteration(t, T);
    return 1.0 - static_cast<double>(t) / static_cast<double>(T);
}

Vec apts_scale_brownian(Vec rb, int t, int T, AptsBrownianExponent exponent) {
    const double f = apts_brownian_factor(t, T, exponent);
    for (auto& v : rb) {
        v *= f;
    }
    return rb;
}

Vec apts_scale_levy(Vec rl, int t, int T) {
    const double f = apts_levy_factor(t, T);
    for (auto& v : rl) {
        v *= f;
    }
    return rl;
}

}  // namespace gazelle
