#include "gazelle/goa.hpp"

#include <cmath>
#include <stdexcept>

namespace gazelle {

namespace {

// Probability threshold of the binary escape mask, as printed in the
// escape rule (a literal, not the PSR parameter).
constexpr double kEscapeMaskRate = 0.34;

void check_sizes(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("update rule: vector size mismatch");
    }
}

}  // namespace

Vec exploit_move(const Vec& x, const Vec& elite, const Vec& ru, const Vec& rb, double s) {
    check_sizes(x, elite);
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = x[j] + s * ru[j] * rb[j] * (elite[j] - rb[j] * x[j]);
    }
    return out;
}

Vec explore_levy_move(const Vec& x, const Vec& elite, const Vec& ru, const Vec& rl, double s,
                      int t) {
    check_sizes(x, elite);
    const double mu = mu_sign(t);
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = x[j] + s * mu * ru[j] * rl[j] * (elite[j] - rl[j] * x[j]);
    }
    return out;
}

Vec explore_brownian_move(const Vec& x, const Vec& elite, const Vec& rb, const Vec& rl, double s,
                          int t, double cf) {
    check_sizes(x, elite);
    const double mu = mu_sign(t);
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = elite[j] + s * mu * cf * rb[j] * (rl[j] * elite[j] - x[j]);
    }
    return out;
}

Vec exploit_levy_move(const Vec& x, const Vec& elite, const Vec& rl, double s, int t, double cf) {
    check_sizes(x, elite);
    const double mu = mu_sign(t);
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = elite[j] + s * mu * cf * rl[j] * (rl[j] * elite[j] - x[j]);
    }
    return out;
}

Vec escape_jump_move(const Vec& x, const Vec& mask, const Vec& jump, double cf) {
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = x[j] + cf * mask[j] * jump[j];
    }
    return out;
}

Vec escape_drift_move(const Vec& x, const Vec& xa, const Vec& xb, double r1, double psr) {
    const double step = psr * (1.0 - r1) + r1;
    Vec out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = x[j] + step * (xa[j] - xb[j]);
    }
    return out;
}

namespace {

Vec uniform_vector(RngStream& rng, std::size_t d) {
    Vec out(d);
    for (auto& v : out) {
        v = rng.uniform();
    }
    return out;
}

Vec scaled(Vec v, double factor) {
    if (factor != 1.0) {
        for (auto& x : v) {
            x *= factor;
        }
    }
    return v;
}

}  // namespace

Vec exploit_step(const Agent& agent, const Agent& elite, RngStream& rng, const GoaParams& params,
                 int t, int T, const MotionScale& scale) {
    (void)t;
    (void)T;
    const int d = static_cast<int>(agent.position.size());
    const Vec ru = uniform_vector(rng, agent.position.size());
    const Vec rb = scaled(brownian_vector(rng, d), scale.brownian);
    return exploit_move(agent.position, elite.position, ru, rb, params.grazing_speed);
}

Vec explore_levy_step(const Agent& agent, const Agent& elite, RngStream& rng,
                      const GoaParams& params, int t, int T, const MotionScale& scale) {
    (void)T;
    const int d = static_cast<int>(agent.position.size());
    const Vec ru = uniform_vector(rng, agent.position.size());
    const Vec rl = scaled(levy_vector(rng, d, params.levy), scale.levy);
    return explore_levy_move(agent.position, elite.position, ru, rl, params.grazing_speed, t);
}

Vec explore_brownian_step(const Agent& agent, const Agent& elite, RngStream& rng,
                          const GoaParams& params, int t, int T, const MotionScale& scale) {
    const int d = static_cast<int>(agent.position.size());
    const Vec rb = scaled(brownian_vector(rng, d), scale.brownian);
    const Vec rl = scaled(levy_vector(rng, d, params.levy), scale.levy);
    const double cf = cf_factor(t, T, params.cf_variant);
    return explore_brownian_move(agent.position, elite.position, rb, rl, params.grazing_speed, t,
                                 cf);
}

Vec exploit_levy_step(const Agent& agent, const Agent& elite, RngStream& rng,
                      const GoaParams& params, int t, int T, const MotionScale& scale) {
    const int d = static_cast<int>(agent.position.size());
    const Vec rl = scaled(levy_vector(rng, d, params.levy), scale.levy);
    const double cf = cf_factor(t, T, params.cf_variant);
    return exploit_levy_move(agent.position, elite.position, rl, params.grazing_speed, t, cf);
}

Population initialize(RngStream& rng, const Problem& problem, int n) {
    if (n < 2) {
        throw std::invalid_argument("initialize: population size must be >= 2");
    }
    Population pop;
    pop.agents.resize(static_cast<std::size_t>(n));
    const auto& lo = problem.bounds.lower;
    const auto& hi = problem.bounds.upper;
    for (auto& agent : pop.agents) {
        agent.position.resize(problem.dimension);
        for (std::size_t j = 0; j < problem.dimension; ++j) {
            agent.position[j] = lo[j] + rng.uniform() * (hi[j] - lo[j]);
        }
        agent.fitness = evaluate(problem, agent.position);
    }
    pop.elite = pop.agents.front();
    for (const auto& agent : pop.agents) {
        if (agent.fitness < pop.elite.fitness) {
            pop.elite = agent;
        }
    }
    return pop;
}

void refresh_elite(Population& pop) {
    for (const auto& agent : pop.agents) {
        if (agent.fitness < pop.elite.fitness) {
            pop.elite = agent;
        }
    }
}

long escape_step(Population& pop, RngStream& rng, const GoaParams& params, int t, int T,
                 const Problem& problem) {
    const std::size_t n = pop.agents.size();
    if (n < 2) {
        throw std::runtime_error("escape_step: population of at least 2 agents required");
    }
    const double cf = cf_factor(t, T, params.cf_variant);
    const double psr = params.predator_success_rate;
    const auto& lo = problem.bounds.lower;
    const auto& hi = problem.bounds.upper;

    std::vector<Vec> snapshot(n);
    for (std::size_t i = 0; i < n; ++i) {
        snapshot[i] = pop.agents[i].position;
    }

    std::vector<Vec> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r2 = rng.uniform();
        if (r2 <= psr) {
            Vec mask(problem.dimension);
            for (auto& m : mask) {
                m = rng.uniform() < kEscapeMaskRate ? 0.0 : 1.0;
            }
            Vec jump(problem.dimension);
            for (std::size_t j = 0; j < problem.dimension; ++j) {
                jump[j] = lo[j] + rng.uniform() * (hi[j] - lo[j]);
            }
            candidates[i] = escape_jump_move(snapshot[i], mask, jump, cf);
        } else {
            const double r1 = rng.uniform();
            const int a = rng.uniform_index(static_cast<int>(n));
            int b = rng.uniform_index(static_cast<int>(n) - 1);
            if (b >= a) {
                ++b;
            }
            candidates[i] = escape_drift_move(snapshot[i], snapshot[static_cast<std::size_t>(a)],
                                              snapshot[static_cast<std::size_t>(b)], r1, psr);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        pop.agents[i].position = clamp(std::move(candidates[i]), problem.bounds);
        pop.agents[i].fitness = evaluate(problem, pop.agents[i].position);
    }
    refresh_elite(pop);
    return static_cast<long>(n);
}

long goa_update_sweep(Population& pop, RngStream& rng, const GoaParams& params, int t, int T,
                      const Problem& problem, const MotionScale& scale) {
    const std::size_t n = pop.agents.size();
    const Agent elite = pop.elite;  // attractor fixed for the sweep
    const bool exploit = rng.uniform() < 0.5;
    const std::size_t half = n / 2;

    for (std::size_t i = 0; i < n; ++i) {
        Agent& agent = pop.agents[i];
        Vec candidate;
        if (exploit) {
            candidate = exploit_step(agent, elite, rng, params, t, T, scale);
        } else if (i < half) {
            candidate = explore_levy_step(agent, elite, rng, params, t, T, scale);
        } else {
            candidate = explore_brownian_step(agent, elite, rng, params, t, T, scale);
        }
        candidate = clamp(std::move(candidate), problem.bounds);
        const double fitness = evaluate(problem, candidate);
        if (fitness < agent.fitness) {
            agent.position = std::move(candidate);
            agent.fitness = fitness;
        }
    }
    refresh_elite(pop);
    return static_cast<long>(n);
}

}  // namespace gazelle
