#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gazelle/bench.hpp"
#include "gazelle/core.hpp"
#include "gazelle/msigoa.hpp"
#include "gazelle/problems.hpp"
#include "gazelle/rng.hpp"

namespace {

int cmd_list() {
    std::cout << "problems:\n";
    for (const auto& name : gazelle::catalog_names()) {
        const bool fixed = gazelle::catalog_fixed_dimension(name);
        const auto p = gazelle::make_problem(name, fixed ? 0 : 10);
        std::cout << "  " << name;
        if (fixed) {
            std::cout << "  (dim " << p.dimension << ", " << p.constraints.size()
                      << " constraints)";
        } else {
            std::cout << "  (dim scalable, shown at 10)";
        }
        std::cout << "  box [" << p.bounds.lower.front() << ", " << p.bounds.upper.front() << "]";
        if (p.optimum_value) {
            std::cout << "  optimum " << *p.optimum_value;
        }
        std::cout << "\n";
    }
    std::cout << "algorithms (ibuf/apts/dprm):\n";
    for (const auto& name : gazelle::StrategyConfig::variant_names()) {
        const auto strategy = *gazelle::StrategyConfig::by_name(name);
        std::cout << "  " << name << "  " << (strategy.use_ibuf ? 'Y' : 'N') << '/'
                  << (strategy.use_apts ? 'Y' : 'N') << '/' << (strategy.use_dprm ? 'Y' : 'N')
                  << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& algo, const std::string& problem_name, std::size_t dim,
              std::uint64_t seed, int iterations, int population) {
    const auto strategy = gazelle::StrategyConfig::by_name(algo);
    if (!strategy) {
        std::string valid;
        for (const auto& v : gazelle::StrategyConfig::variant_names()) {
            if (!valid.empty()) {
                valid += ", ";
            }
            valid += v;
        }
        std::cerr << "unknown algorithm '" << algo << "'; valid names: " << valid << "\n";
        return 1;
    }
    const bool fixed = gazelle::catalog_fixed_dimension(problem_name);
    const gazelle::Problem problem = gazelle::make_problem(problem_name, fixed ? dim : (dim == 0 ? 10 : dim));

    gazelle::RunConfig config;
    config.population_size = population;
    config.max_iterations = iterations;
    config.runs = 1;
    config.seed = seed;
    config.strategy = *strategy;
    const auto [record, trace] = gazelle::run_variant(problem, config);

    nlohmann::json out;
    out["algorithm"] = algo;
    out["problem"] = problem.name;
    out["dim"] = problem.dimension;
    out["seed"] = record.seed;
    out["population"] = config.population_size;
    out["iterations"] = config.max_iterations;
    out["evaluations"] = record.evaluations;
    out["best_fitness"] = record.best.fitness;
    out["best_position"] = record.best.position;
    if (!problem.constraints.empty()) {
        out["constraint_violation"] = gazelle::constraint_violation(problem, record.best.position);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gazelle swarm-optimizer benchmark harness"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute a campaign from a JSON config");
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    int iterations = 0;
    int population = 0;
    int runs = 0;
    int workers = 0;
    bool no_timing = false;
    run->add_option("--config", config_path, "campaign JSON file")->required();
    run->add_option("--out", out_dir, "output directory (overrides config)");
    run->add_option("--seed", seed, "base seed (overrides config)");
    run->add_option("--iters", iterations, "iterations per run (overrides config)");
    run->add_option("--pop", population, "population size (overrides config)");
    run->add_option("--runs", runs, "independent runs per pair (overrides config)");
    run->add_option("--workers", workers, "worker threads (output is identical for any count)");
    run->add_flag("--no-timing", no_timing, "omit the wall_ms column from results.csv");

    auto* list = app.add_subcommand("list", "list catalog problems and algorithm variants");

    auto* solve = app.add_subcommand("solve", "single seeded run, prints JSON to stdout");
    std::string algo = "msigoa";
    std::string problem;
    std::size_t dim = 0;
    std::uint64_t solve_seed = 0;
    int solve_iters = 500;
    int solve_pop = 30;
    solve->add_option("--algo", algo, "algorithm variant name")->required();
    solve->add_option("--problem", problem, "catalog problem name")->required();
    solve->add_option("--dim", dim, "dimension (scalable problems; default 10)");
    solve->add_option("--seed", solve_seed, "run seed");
    solve->add_option("--iters", solve_iters, "iterations");
    solve->add_option("--pop", solve_pop, "population size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            return cmd_list();
        }
        if (solve->parsed()) {
            return cmd_solve(algo, problem, dim, solve_seed, solve_iters, solve_pop);
        }
        auto campaign = gazelle::bench::parse_config(config_path);
        if (run->count("--out") > 0) {
            campaign.output_dir = out_dir;
        }
        if (run->count("--seed") > 0) {
            campaign.base_seed = seed;
        }
        if (run->count("--iters") > 0) {
            campaign.max_iterations = iterations;
        }
        if (run->count("--pop") > 0) {
            campaign.population_size = population;
        }
        if (run->count("--runs") > 0) {
            campaign.runs = runs;
        }
        if (run->count("--workers") > 0) {
            campaign.workers = workers;
        }
        if (no_timing) {
            campaign.include_timing = false;
        }
        if (campaign.runs < 1 || campaign.max_iterations < 1 || campaign.population_size < 2) {
            std::cerr << "invalid run configuration (runs >= 1, iters >= 1, pop >= 2)\n";
            return 1;
        }
        gazelle::bench::run_campaign(campaign);
        std::cout << "campaign complete: "
                  << campaign.algorithms.size() * campaign.problems.size() *
                         static_cast<std::size_t>(campaign.runs)
                  << " runs written to " << campaign.output_dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
