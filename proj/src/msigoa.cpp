#include "gazelle/msigoa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gazelle {

namespace {

const char* kVariantNames[] = {"goa",    "goa-1",  "goa-2",  "goa-3",
                               "goa-12", "goa-13", "goa-23", "msigoa"};
const bool kVariantFlags[][3] = {
    {false, false, false}, {true, false, false}, {false, true, false}, {false, false, true},
    {true, true, false},   {true, false, true},  {false, true, true},  {true, true, true},
};

}  // namespace

std::optional<StrategyConfig> StrategyConfig::by_name(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kVariantNames); ++i) {
        if (name == kVariantNames[i]) {
            return variant(kVariantFlags[i][0], kVariantFlags[i][1], kVariantFlags[i][2]);
        }
    }
    return std::nullopt;
}

const std::vector<std::string>& StrategyConfig::variant_names() {
    static const std::vector<std::string> names(std::begin(kVariantNames),
                                                std::end(kVariantNames));
    return names;
}

IbufPhase ibuf_phase(int t, int T) {
    if (T < 1 || t < 1 || t > T) {
        throw std::invalid_argument("ibuf_phase: t must satisfy 1 <= t <= T");
    }
    if (3 * t < T) {
        return IbufPhase::early;
    }
    if (3 * t < 2 * T) {
        return IbufPhase::middle;
    }
    return IbufPhase::late;
}

DominantArchive::DominantArchive(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ < 1) {
        throw std::invalid_argument("DominantArchive: capacity must be >= 1");
    }
}

void DominantArchive::push(ArchiveEntry entry) {
    members_.push_back(std::move(entry));
    while (members_.size() > capacity_) {
        members_.pop_front();
    }
}

long ibuf_update(Population& pop, RngStream& rng, const GoaParams& params, int t, int T,
                 const Problem& problem, const MotionScale& scale) {
    const std::size_t n = pop.agents.size();
    const Agent elite = pop.elite;
    const IbufPhase phase = ibuf_phase(t, T);
    const std::size_t half = n / 2;

    for (std::size_t i = 0; i < n; ++i) {
        Agent& agent = pop.agents[i];
        Vec candidate;
        switch (phase) {
            case IbufPhase::early:
                candidate = exploit_step(agent, elite, rng, params, t, T, scale);
                break;
            case IbufPhase::middle:
                candidate = i < half ? explore_levy_step(agent, elite, rng, params, t, T, scale)
                                     : explore_brownian_step(agent, elite, rng, params, t, T, scale);
                break;
            case IbufPhase::late:
                candidate = i < half ? explore_levy_step(agent, elite, rng, params, t, T, scale)
                                     : exploit_levy_step(agent, elite, rng, params, t, T, scale);
                break;
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

void archive_update(DominantArchive& archive, const Population& pop) {
    const std::size_t n = pop.agents.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop.agents[a].fitness < pop.agents[b].fitness;
    });
    const std::size_t keep = (n + 1) / 2;
    for (std::size_t k = 0; k < keep; ++k) {
        const Agent& agent = pop.agents[order[k]];
        archive.push(ArchiveEntry{agent.position, agent.fitness});
    }
}

Vec dprm_weights(int n) {
    if (n < 1) {
        throw std::invalid_argument("dprm_weights: n must be >= 1");
    }
    Vec w(static_cast<std::size_t>(n));
    const double top = std::log(n + 0.5);
    double sum = 0.0;
    for (int i = 1; i <= n; ++i) {
        w[static_cast<std::size_t>(i - 1)] = top - std::log(static_cast<double>(i));
        sum += w[static_cast<std::size_t>(i - 1)];
    }
    for (auto& v : w) {
        v /= sum;
    }
    return w;
}

namespace {

// Archive members sorted best-first, as indices into members().
std::vector<std::size_t> ranked_indices(const DominantArchive& archive) {
    std::vector<std::size_t> order(archive.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return archive.members()[a].fitness < archive.members()[b].fitness;
    });
    return order;
}

Vec weighted_center(const DominantArchive& archive, const std::vector<std::size_t>& order,
                    const Vec& weights) {
    const std::size_t d = archive.members().front().position.size();
    Vec center(d, 0.0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Vec& pos = archive.members()[order[k]].position;
        for (std::size_t j = 0; j < d; ++j) {
            center[j] += weights[k] * pos[j];
        }
    }
    return center;
}

// g = sum_k eta_k (X_k - x_d) / sqrt(n); one normal per member, rank order.
Vec noise_sample(const DominantArchive& archive, const std::vector<std::size_t>& order,
                 const Vec& center, RngStream& rng) {
    const std::size_t d = center.size();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(order.size()));
    Vec g(d, 0.0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const double eta = rng.normal();
        const Vec& pos = archive.members()[order[k]].position;
        for (std::size_t j = 0; j < d; ++j) {
            g[j] += eta * (pos[j] - center[j]);
        }
    }
    for (auto& v : g) {
        v *= inv_sqrt_n;
    }
    return g;
}

}  // namespace

std::pair<Vec, Vec> dprm_center_and_sample(const DominantArchive& archive, RngStream& rng) {
    if (archive.empty()) {
        throw std::runtime_error("dprm_center_and_sample: archive is empty");
    }
    const auto order = ranked_indices(archive);
    const Vec weights = dprm_weights(static_cast<int>(order.size()));
    Vec center = weighted_center(archive, order, weights);
    Vec g = noise_sample(archive, order, center, rng);
    return {std::move(center), std::move(g)};
}

long dprm_restart(Population& pop, const DominantArchive& archive, RngStream& rng,
                  const Problem& problem, const std::vector<char>* restart,
                  DprmAcceptance acceptance) {
    if (archive.empty()) {
        return 0;
    }
    const auto order = ranked_indices(archive);
    const Vec weights = dprm_weights(static_cast<int>(order.size()));
    const Vec center = weighted_center(archive, order, weights);
    const Agent elite = pop.elite;

    long evals = 0;
    for (std::size_t i = 0; i < pop.agents.size(); ++i) {
        if (restart != nullptr && !(*restart)[i]) {
            continue;
        }
        Agent& agent = pop.agents[i];
        const Vec g = noise_sample(archive, order, center, rng);
        Vec candidate(problem.dimension);
        for (std::size_t j = 0; j < problem.dimension; ++j) {
            candidate[j] = (agent.position[j] + center[j] + elite.position[j]) / 3.0 + g[j];
        }
        candidate = clamp(std::move(candidate), problem.bounds);
        const double fitness = evaluate(problem, candidate);
        ++evals;
        if (acceptance == DprmAcceptance::replace || fitness < agent.fitness) {
            agent.position = std::move(candidate);
            agent.fitness = fitness;
        }
    }
    refresh_elite(pop);
    return evals;
}

namespace {

void validate_config(const Problem& problem, const RunConfig& config) {
    if (config.population_size < 2) {
        throw std::invalid_argument("run config: population_size must be >= 2");
    }
    if (config.max_iterations < 1) {
        throw std::invalid_argument("run config: max_iterations must be >= 1");
    }
    if (config.strategy.nd_multiplier < 1) {
        throw std::invalid_argument("run config: nd_multiplier must be >= 1");
    }
    if (problem.dimension < 1 || problem.bounds.dimension() != problem.dimension) {
        throw std::invalid_argument("run config: problem has inconsistent dimension");
    }
}

}  // namespace

std::pair<RunRecord, ConvergenceTrace> run_variant(const Problem& problem,
                                                   const RunConfig& config) {
    validate_config(problem, config);
    const StrategyConfig& strategy = config.strategy;
    const int T = config.max_iterations;
    const std::size_t n = static_cast<std::size_t>(config.population_size);

    RngStream rng(config.seed);
    Population pop = initialize(rng, problem, config.population_size);
    long evals = static_cast<long>(n);

    DominantArchive archive(strategy.use_dprm
                                ? static_cast<std::size_t>(strategy.nd_multiplier) *
                                      problem.dimension
                                : 1);
    ConvergenceTrace trace;
    trace.best_so_far.reserve(static_cast<std::size_t>(T));
    Vec fitness_at_start(n);

    for (int t = 1; t <= T; ++t) {
        const bool track_improvement =
            strategy.use_dprm && strategy.dprm_scope == DprmScope::non_improved;
        if (track_improvement) {
            for (std::size_t i = 0; i < n; ++i) {
                fitness_at_start[i] = pop.agents[i].fitness;
            }
        }

        MotionScale scale;
        if (strategy.use_apts) {
            scale.brownian = apts_brownian_factor(t, T, strategy.apts_brownian_exponent);
            scale.levy = apts_levy_factor(t, T);
        }

        if (strategy.use_ibuf) {
            evals += ibuf_update(pop, rng, config.params, t, T, problem, scale);
        } else {
            evals += goa_update_sweep(pop, rng, config.params, t, T, problem, scale);
        }

        evals += escape_step(pop, rng, config.params, t, T, problem);

        if (strategy.use_dprm) {
            archive_update(archive, pop);
            if (track_improvement) {
                std::vector<char> mask(n);
                for (std::size_t i = 0; i < n; ++i) {
                    mask[i] = pop.agents[i].fitness < fitness_at_start[i] ? 0 : 1;
                }
                evals += dprm_restart(pop, archive, rng, problem, &mask,
                                      strategy.dprm_acceptance);
            } else {
                evals += dprm_restart(pop, archive, rng, problem, nullptr,
                                      strategy.dprm_acceptance);
            }
        }

        trace.best_so_far.push_back(pop.elite.fitness);
    }

    RunRecord record;
    record.best = pop.elite;
    record.seed = config.seed;
    record.evaluations = evals;
    return {std::move(record), std::move(trace)};
}

std::pair<RunRecord, ConvergenceTrace> run_goa(const Problem& problem, const RunConfig& config) {
    RunConfig baseline = config;
    baseline.strategy = StrategyConfig::goa();
    return run_variant(problem, baseline);
}

}  // namespace gazelle
