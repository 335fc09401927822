#include "gazelle/problems.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "gazelle/rng.hpp"

namespace gazelle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kE = 2.718281828459045235360287471352662498;

// Offset and optimizer coordinate of Schwefel 2.26, chosen so the
// double-precision residual at the optimizer is ~1e-13 per dimension.
constexpr double kSchwefelOffset = 418.9828872724337;
constexpr double kSchwefelArgmin = 420.9687463599820;

Problem scalable(std::string name, std::size_t d, double lo, double hi,
                 std::function<double(const Vec&)> objective, double opt_value,
                 Vec opt_position) {
    Problem p;
    p.name = std::move(name);
    p.dimension = d;
    p.bounds = Bounds::uniform_box(d, lo, hi);
    p.objective = std::move(objective);
    p.optimum_value = opt_value;
    p.optimum_position = std::move(opt_position);
    return p;
}

void require_dimension(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("classic suite problems require dimension >= 2");
    }
}

double rastrigin_value(const Vec& x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        sum += v * v - 10.0 * std::cos(2.0 * kPi * v);
    }
    return sum;
}

}  // namespace

Problem sphere_problem(std::size_t d) {
    require_dimension(d);
    return scalable("sphere", d, -100.0, 100.0,
                    [](const Vec& x) {
                        double sum = 0.0;
                        for (double v : x) {
                            sum += v * v;
                        }
                        return sum;
                    },
                    0.0, Vec(d, 0.0));
}

Problem rosenbrock_problem(std::size_t d) {
    require_dimension(d);
    return scalable("rosenbrock", d, -30.0, 30.0,
                    [](const Vec& x) {
                        double sum = 0.0;
                        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                            const double a = x[i + 1] - x[i] * x[i];
                            const double b = 1.0 - x[i];
                            sum += 100.0 * a * a + b * b;
                        }
                        return sum;
                    },
                    0.0, Vec(d, 1.0));
}

Problem rastrigin_problem(std::size_t d) {
    require_dimension(d);
    return scalable("rastrigin", d, -5.12, 5.12, rastrigin_value, 0.0, Vec(d, 0.0));
}

Problem ackley_problem(std::size_t d) {
    require_dimension(d);
    return scalable("ackley", d, -32.768, 32.768,
                    [](const Vec& x) {
                        const double n = static_cast<double>(x.size());
                        double sq = 0.0;
                        double cs = 0.0;
                        for (double v : x) {
                            sq += v * v;
                            cs += std::cos(2.0 * kPi * v);
                        }
                        return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) +
                               20.0 + kE;
                    },
                    0.0, Vec(d, 0.0));
}

Problem griewank_problem(std::size_t d) {
    require_dimension(d);
    return scalable("griewank", d, -600.0, 600.0,
                    [](const Vec& x) {
                        double sum = 0.0;
                        double prod = 1.0;
                        for (std::size_t i = 0; i < x.size(); ++i) {
                            sum += x[i] * x[i] / 4000.0;
                            prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
                        }
                        return sum - prod + 1.0;
                    },
                    0.0, Vec(d, 0.0));
}

Problem schwefel226_problem(std::size_t d) {
    require_dimension(d);
    return scalable("schwefel226", d, -500.0, 500.0,
                    [](const Vec& x) {
                        double sum = 0.0;
                        for (double v : x) {
                            sum += v * std::sin(std::sqrt(std::fabs(v)));
                        }
                        return kSchwefelOffset * static_cast<double>(x.size()) - sum;
                    },
                    0.0, Vec(d, kSchwefelArgmin));
}

Problem levy_problem(std::size_t d) {
    require_dimension(d);
    return scalable("levy", d, -10.0, 10.0,
                    [](const Vec& x) {
                        const std::size_t n = x.size();
                        auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
                        const double s1 = std::sin(kPi * w(0));
                        double sum = s1 * s1;
                        for (std::size_t i = 0; i + 1 < n; ++i) {
                            const double wi = w(i);
                            const double s = std::sin(kPi * wi + 1.0);
                            sum += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
                        }
                        const double wn = w(n - 1);
                        const double sn = std::sin(2.0 * kPi * wn);
                        sum += (wn - 1.0) * (wn - 1.0) * (1.0 + sn * sn);
                        return sum;
                    },
                    0.0, Vec(d, 1.0));
}

namespace {

// Fixed seed of the shipped rotation/shift instances.
constexpr std::uint64_t kRotationSeed = 0x9E3779B97F4A7C15ULL;

struct RotationInstance {
    std::vector<double> rotation;  // row-major d x d, orthogonal
    Vec shift;
};

// Deterministic per-dimension instance: Gaussian matrix orthonormalized by
// modified Gram-Schmidt (with one re-orthogonalization pass), shift drawn
// uniformly in [-2, 2]^d.
RotationInstance make_rotation_instance(std::size_t d) {
    RngStream rng(kRotationSeed ^ static_cast<std::uint64_t>(d));
    RotationInstance inst;
    inst.rotation.resize(d * d);
    for (auto& v : inst.rotation) {
        v = rng.normal();
    }
    auto row = [&](std::size_t i) { return inst.rotation.data() + i * d; };
    for (std::size_t i = 0; i < d; ++i) {
        double* ri = row(i);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < i; ++k) {
                const double* rk = row(k);
                double dot = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    dot += ri[j] * rk[j];
                }
                for (std::size_t j = 0; j < d; ++j) {
                    ri[j] -= dot * rk[j];
                }
            }
        }
        double norm = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            norm += ri[j] * ri[j];
        }
        norm = std::sqrt(norm);
        for (std::size_t j = 0; j < d; ++j) {
            ri[j] /= norm;
        }
    }
    inst.shift.resize(d);
    for (auto& v : inst.shift) {
        v = rng.uniform(-2.0, 2.0);
    }
    return inst;
}

}  // namespace

Problem rotated_rastrigin_problem(std::size_t d) {
    require_dimension(d);
    auto inst = std::make_shared<RotationInstance>(make_rotation_instance(d));
    Vec opt = inst->shift;
    Problem p = scalable("rot-rastrigin", d, -5.12, 5.12,
                         [inst, d](const Vec& x) {
                             Vec z(d, 0.0);
                             for (std::size_t i = 0; i < d; ++i) {
                                 const double* ri = inst->rotation.data() + i * d;
                                 double acc = 0.0;
                                 for (std::size_t j = 0; j < d; ++j) {
                                     acc += ri[j] * (x[j] - inst->shift[j]);
                                 }
                                 z[i] = acc;
                             }
                             return rastrigin_value(z);
                         },
                         0.0, std::move(opt));
    return p;
}

std::vector<Problem> classic_suite(std::size_t d) {
    require_dimension(d);
    std::vector<Problem> suite;
    suite.push_back(sphere_problem(d));
    suite.push_back(rosenbrock_problem(d));
    suite.push_back(rastrigin_problem(d));
    suite.push_back(ackley_problem(d));
    suite.push_back(griewank_problem(d));
    suite.push_back(schwefel226_problem(d));
    suite.push_back(levy_problem(d));
    suite.push_back(rotated_rastrigin_problem(d));
    return suite;
}

Problem spring_problem() {
    Problem p;
    p.name = "spring";
    p.dimension = 3;
    p.bounds = Bounds({0.05, 0.25, 2.0}, {2.0, 1.30, 15.0});
    p.objective = [](const Vec& x) { return (x[2] + 2.0) * x[1] * x[0] * x[0]; };
    p.constraints = {
        [](const Vec& x) { return 1.0 - x[1] * x[1] * x[1] * x[2] / (71785.0 * std::pow(x[0], 4)); },
        [](const Vec& x) {
            const double x1 = x[0];
            const double x2 = x[1];
            return (4.0 * x2 * x2 - x1 * x2) /
                       (12566.0 * (x2 * x1 * x1 * x1 - std::pow(x1, 4))) +
                   1.0 / (5108.0 * x1 * x1) - 1.0;
        },
        [](const Vec& x) { return 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2]); },
        [](const Vec& x) { return (x[0] + x[1]) / 1.5 - 1.0; },
    };
    p.optimum_value = 0.012665232788;
    p.optimum_position = Vec{0.051689061, 0.356717754, 11.288965765};
    return p;
}

Problem pressure_vessel_problem() {
    Problem p;
    p.name = "pressure-vessel";
    p.dimension = 4;
    p.bounds = Bounds({0.1, 0.1, 10.0, 10.0}, {2.0, 2.0, 200.0, 200.0});
    p.objective = [](const Vec& x) {
        return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] +
               3.1661 * x[0] * x[0] * x[3] + 19.84 * x[0] * x[0] * x[2];
    };
    p.constraints = {
        [](const Vec& x) { return -x[0] + 0.0193 * x[2]; },
        [](const Vec& x) { return -x[1] + 0.00954 * x[2]; },
        [](const Vec& x) {
            // Required volume, scaled dimensionless.
            const double volume = kPi * x[2] * x[2] * x[3] + (4.0 / 3.0) * kPi * std::pow(x[2], 3);
            return (1296000.0 - volume) / 1296000.0;
        },
        [](const Vec& x) { return x[3] - 240.0; },
    };
    p.optimum_value = 5885.332774;
    p.optimum_position = Vec{0.778168641, 0.384649163, 40.319618724, 200.0};
    return p;
}

Problem welded_beam_problem() {
    Problem p;
    p.name = "welded-beam";
    p.dimension = 4;
    p.bounds = Bounds({0.1, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0});
    constexpr double P = 6000.0;
    constexpr double L = 14.0;
    constexpr double E = 30e6;
    constexpr double G = 12e6;
    constexpr double tau_max = 13600.0;
    constexpr double sigma_max = 30000.0;
    constexpr double delta_max = 0.25;
    p.objective = [](const Vec& x) {
        return 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
    };
    auto shear = [=](const Vec& x) {
        const double tau_p = P / (std::sqrt(2.0) * x[0] * x[1]);
        const double moment = P * (L + x[1] / 2.0);
        const double half_sq = (x[0] + x[2]) / 2.0 * ((x[0] + x[2]) / 2.0);
        const double radius = std::sqrt(x[1] * x[1] / 4.0 + half_sq);
        const double torsion = 2.0 * std::sqrt(2.0) * x[0] * x[1] * (x[1] * x[1] / 4.0 + half_sq);
        const double tau_pp = moment * radius / torsion;
        return std::sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * x[1] / (2.0 * radius) +
                         tau_pp * tau_pp);
    };
    auto buckling = [=](const Vec& x) {
        return 4.013 * E * std::sqrt(x[2] * x[2] * std::pow(x[3], 6) / 36.0) / (L * L) *
               (1.0 - x[2] / (2.0 * L) * std::sqrt(E / (4.0 * G)));
    };
    p.constraints = {
        [](const Vec& x) { return x[0] - x[3]; },
        [=](const Vec& x) {
            const double deflection = 4.0 * P * L * L * L / (E * std::pow(x[2], 3) * x[3]);
            return deflection / delta_max - 1.0;
        },
        [=](const Vec& x) { return (P - buckling(x)) / P; },
        [=](const Vec& x) { return shear(x) / tau_max - 1.0; },
        [=](const Vec& x) {
            const double bending = 6.0 * P * L / (x[3] * x[2] * x[2]);
            return bending / sigma_max - 1.0;
        },
    };
    p.optimum_value = 1.695246717;
    p.optimum_position = Vec{0.205729640, 3.253119865, 9.036623910, 0.205729640};
    return p;
}

namespace {

struct CatalogRow {
    const char* name;
    bool fixed_dimension;
    Problem (*scalable_make)(std::size_t);
    Problem (*fixed_make)();
};

const CatalogRow kCatalog[] = {
    {"sphere", false, sphere_problem, nullptr},
    {"rosenbrock", false, rosenbrock_problem, nullptr},
    {"rastrigin", false, rastrigin_problem, nullptr},
    {"ackley", false, ackley_problem, nullptr},
    {"griewank", false, griewank_problem, nullptr},
    {"schwefel226", false, schwefel226_problem, nullptr},
    {"levy", false, levy_problem, nullptr},
    {"rot-rastrigin", false, rotated_rastrigin_problem, nullptr},
    {"spring", true, nullptr, spring_problem},
    {"pressure-vessel", true, nullptr, pressure_vessel_problem},
    {"welded-beam", true, nullptr, welded_beam_problem},
};

std::string catalog_names_joined() {
    std::string out;
    for (const auto& row : kCatalog) {
        if (!out.empty()) {
            out += ", ";
        }
        out += row.name;
    }
    return out;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& row : kCatalog) {
            out.emplace_back(row.name);
        }
        return out;
    }();
    return names;
}

bool catalog_fixed_dimension(const std::string& name) {
    for (const auto& row : kCatalog) {
        if (name == row.name) {
            return row.fixed_dimension;
        }
    }
    throw std::invalid_argument("unknown problem '" + name + "'; valid names: " +
                                catalog_names_joined());
}

Problem make_problem(const std::string& name, std::size_t d) {
    for (const auto& row : kCatalog) {
        if (name != row.name) {
            continue;
        }
        if (row.fixed_dimension) {
            Problem p = row.fixed_make();
            if (d != 0 && d != p.dimension) {
                throw std::invalid_argument("problem '" + name + "' has fixed dimension " +
                                            std::to_string(p.dimension));
            }
            return p;
        }
        return row.scalable_make(d);
    }
    throw std::invalid_argument("unknown problem '" + name + "'; valid names: " +
                                catalog_names_joined());
}

}  // namespace gazelle
