#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gazelle/config.hpp"

namespace gazelle {
namespace bench {

/// One named algorithm configuration of a campaign.
struct AlgorithmSpec {
    std::string name;
    StrategyConfig strategy;
    GoaParams params;
};

/// One benchmark problem of a campaign. `dimension` is resolved at parse
/// time (fixed-dimension problems get their natural dimension).
struct ProblemSpec {
    std::string name;
    std::size_t dimension = 0;
};

struct Campaign {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<ProblemSpec> problems;
    int population_size = 30;
    int max_iterations = 500;
    int runs = 51;
    std::uint64_t base_seed = 0;
    std::string baseline;  // defaults to the first listed algorithm
    std::filesystem::path output_dir = "bench-out";
    bool include_timing = true;
    int workers = 1;
};

/// "name-dim" token used in trace filenames and per-run seed derivation.
std::string problem_key(const ProblemSpec& spec);

/// Reads a campaign from a JSON file. Unknown keys, missing required keys
/// and out-of-range values raise std::runtime_error naming the offender.
Campaign parse_config(const std::filesystem::path& path);

/// Executes every (algorithm, problem, run) triple (optionally on several
/// worker threads; numeric output is independent of the worker count) and
/// writes results.csv, summary.csv, stats.csv and traces/*.csv into
/// campaign.output_dir. Rows are sorted by (algorithm, problem, dim, run).
void run_campaign(const Campaign& campaign);

}  // namespace bench
}  // namespace gazelle
