#include "gazelle/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "gazelle/msigoa.hpp"
#include "gazelle/problems.hpp"
#include "gazelle/rng.hpp"
#include "gazelle/stats.hpp"

namespace gazelle {
namespace bench {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_positions(const Vec& position) {
    std::string out;
    for (std::size_t j = 0; j < position.size(); ++j) {
        if (j > 0) {
            out += ';';
        }
        out += fmt(position[j]);
    }
    return out;
}

[[noreturn]] void config_error(const std::string& message) {
    throw std::runtime_error("config error: " + message);
}

void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            config_error("unknown key '" + item.key() + "' in " + context);
        }
    }
}

CfVariant parse_cf_variant(const std::string& s, const std::string& context) {
    if (s == "rising") {
        return CfVariant::rising;
    }
    if (s == "decaying") {
        return CfVariant::decaying;
    }
    config_error("key 'cf_variant' in " + context + " must be \"rising\" or \"decaying\"");
}

AptsBrownianExponent parse_apts_exponent(const std::string& s, const std::string& context) {
    if (s == "t_over_T") {
        return AptsBrownianExponent::t_over_T;
    }
    if (s == "one_over_T") {
        return AptsBrownianExponent::one_over_T;
    }
    config_error("key 'apts_brownian_exponent' in " + context +
                 " must be \"t_over_T\" or \"one_over_T\"");
}

DprmScope parse_dprm_scope(const std::string& s, const std::string& context) {
    if (s == "all") {
        return DprmScope::all;
    }
    if (s == "non_improved") {
        return DprmScope::non_improved;
    }
    config_error("key 'dprm_scope' in " + context + " must be \"all\" or \"non_improved\"");
}

DprmAcceptance parse_dprm_acceptance(const std::string& s, const std::string& context) {
    if (s == "replace") {
        return DprmAcceptance::replace;
    }
    if (s == "greedy") {
        return DprmAcceptance::greedy;
    }
    config_error("key 'dprm_acceptance' in " + context + " must be \"replace\" or \"greedy\"");
}

AlgorithmSpec parse_algorithm(const json& entry, std::size_t index) {
    const std::string context = "algorithms[" + std::to_string(index) + "]";
    if (!entry.is_object()) {
        config_error(context + " must be an object");
    }
    check_keys(entry, context,
               {"name", "ibuf", "apts", "dprm", "s", "psr", "cf_variant",
                "apts_brownian_exponent", "nd_multiplier", "dprm_scope", "dprm_acceptance",
                "levy_alpha", "levy_scale"});
    if (!entry.contains("name") || !entry.at("name").is_string()) {
        config_error("missing or non-string key 'name' in " + context);
    }
    AlgorithmSpec spec;
    spec.name = entry.at("name").get<std::string>();

    const bool has_flags = entry.contains("ibuf") || entry.contains("apts") ||
                           entry.contains("dprm");
    if (auto named = StrategyConfig::by_name(spec.name)) {
        spec.strategy = *named;
    } else if (!has_flags) {
        std::string valid;
        for (const auto& v : StrategyConfig::variant_names()) {
            if (!valid.empty()) {
                valid += ", ";
            }
            valid += v;
        }
        config_error("unknown algorithm name '" + spec.name + "' in " + context +
                     " (valid variant names: " + valid +
                     "; custom names need explicit ibuf/apts/dprm flags)");
    }
    if (entry.contains("ibuf")) {
        spec.strategy.use_ibuf = entry.at("ibuf").get<bool>();
    }
    if (entry.contains("apts")) {
        spec.strategy.use_apts = entry.at("apts").get<bool>();
    }
    if (entry.contains("dprm")) {
        spec.strategy.use_dprm = entry.at("dprm").get<bool>();
    }
    if (entry.contains("nd_multiplier")) {
        const int nd = entry.at("nd_multiplier").get<int>();
        if (nd < 1) {
            config_error("key 'nd_multiplier' in " + context + " must be >= 1");
        }
        spec.strategy.nd_multiplier = nd;
    }
    if (entry.contains("apts_brownian_exponent")) {
        spec.strategy.apts_brownian_exponent =
            parse_apts_exponent(entry.at("apts_brownian_exponent").get<std::string>(), context);
    }
    if (entry.contains("dprm_scope")) {
        spec.strategy.dprm_scope =
            parse_dprm_scope(entry.at("dprm_scope").get<std::string>(), context);
    }
    if (entry.contains("dprm_acceptance")) {
        spec.strategy.dprm_acceptance =
            parse_dprm_acceptance(entry.at("dprm_acceptance").get<std::string>(), context);
    }
    if (entry.contains("s")) {
        const double s = entry.at("s").get<double>();
        if (!(s > 0.0)) {
            config_error("key 's' in " + context + " must be > 0");
        }
        spec.params.grazing_speed = s;
    }
    if (entry.contains("psr")) {
        const double psr = entry.at("psr").get<double>();
        if (psr < 0.0 || psr > 1.0) {
            config_error("key 'psr' in " + context + " must be in [0, 1]");
        }
        spec.params.predator_success_rate = psr;
    }
    if (entry.contains("cf_variant")) {
        spec.params.cf_variant =
            parse_cf_variant(entry.at("cf_variant").get<std::string>(), context);
    }
    if (entry.contains("levy_alpha") || entry.contains("levy_scale")) {
        const double alpha = entry.contains("levy_alpha")
                                 ? entry.at("levy_alpha").get<double>()
                                 : spec.params.levy.alpha;
        const double scale = entry.contains("levy_scale")
                                 ? entry.at("levy_scale").get<double>()
                                 : spec.params.levy.scale;
        if (!(alpha > 0.0) || alpha > 2.0) {
            config_error("key 'levy_alpha' in " + context + " must be in (0, 2]");
        }
        spec.params.levy = LevyParams::make(alpha, scale);
    }
    return spec;
}

ProblemSpec parse_problem(const json& entry, std::size_t index) {
    const std::string context = "problems[" + std::to_string(index) + "]";
    if (!entry.is_object()) {
        config_error(context + " must be an object");
    }
    check_keys(entry, context, {"name", "dim"});
    if (!entry.contains("name") || !entry.at("name").is_string()) {
        config_error("missing or non-string key 'name' in " + context);
    }
    ProblemSpec spec;
    spec.name = entry.at("name").get<std::string>();
    std::size_t dim = 0;
    if (entry.contains("dim")) {
        const long long raw = entry.at("dim").get<long long>();
        if (raw < 1) {
            config_error("key 'dim' in " + context + " must be >= 1");
        }
        dim = static_cast<std::size_t>(raw);
    }
    Problem problem;
    try {
        problem = make_problem(spec.name, dim);
    } catch (const std::invalid_argument& e) {
        config_error(std::string(e.what()) + " (in " + context + ")");
    }
    if (!catalog_fixed_dimension(spec.name) && dim == 0) {
        config_error("missing key 'dim' in " + context + " (problem '" + spec.name +
                     "' is dimension-scalable)");
    }
    spec.dimension = problem.dimension;
    return spec;
}

}  // namespace

std::string problem_key(const ProblemSpec& spec) {
    return spec.name + "-" + std::to_string(spec.dimension);
}

Campaign parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("config error: cannot open '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config error: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        config_error("top level must be a JSON object");
    }
    check_keys(doc, "top level",
               {"algorithms", "problems", "population", "iterations", "runs", "seed",
                "baseline", "output"});

    Campaign campaign;
    if (!doc.contains("algorithms") || !doc.at("algorithms").is_array() ||
        doc.at("algorithms").empty()) {
        config_error("key 'algorithms' must be a non-empty array");
    }
    if (!doc.contains("problems") || !doc.at("problems").is_array() ||
        doc.at("problems").empty()) {
        config_error("key 'problems' must be a non-empty array");
    }
    for (std::size_t i = 0; i < doc.at("algorithms").size(); ++i) {
        campaign.algorithms.push_back(parse_algorithm(doc.at("algorithms")[i], i));
    }
    for (std::size_t i = 0; i < doc.at("problems").size(); ++i) {
        campaign.problems.push_back(parse_problem(doc.at("problems")[i], i));
    }

    std::set<std::string> algo_names;
    for (const auto& a : campaign.algorithms) {
        if (!algo_names.insert(a.name).second) {
            config_error("duplicate algorithm name '" + a.name + "'");
        }
    }
    std::set<std::string> problem_keys;
    for (const auto& p : campaign.problems) {
        if (!problem_keys.insert(problem_key(p)).second) {
            config_error("duplicate problem '" + problem_key(p) + "'");
        }
    }

    if (doc.contains("population")) {
        campaign.population_size = doc.at("population").get<int>();
        if (campaign.population_size < 2) {
            config_error("key 'population' must be >= 2");
        }
    }
    if (doc.contains("iterations")) {
        campaign.max_iterations = doc.at("iterations").get<int>();
        if (campaign.max_iterations < 1) {
            config_error("key 'iterations' must be >= 1");
        }
    }
    if (doc.contains("runs")) {
        campaign.runs = doc.at("runs").get<int>();
        if (campaign.runs < 1) {
            config_error("key 'runs' must be >= 1");
        }
    }
    if (doc.contains("seed")) {
        campaign.base_seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("output")) {
        campaign.output_dir = doc.at("output").get<std::string>();
    }
    campaign.baseline = doc.contains("baseline") ? doc.at("baseline").get<std::string>()
                                                 : campaign.algorithms.front().name;
    if (algo_names.count(campaign.baseline) == 0) {
        config_error("key 'baseline' names '" + campaign.baseline +
                     "', which is not in 'algorithms'");
    }
    return campaign;
}

namespace {

struct JobResult {
    RunRecord record;
    ConvergenceTrace trace;
    double wall_ms = 0.0;
};

struct SortedCampaign {
    std::vector<std::size_t> algorithm_order;  // indices sorted by name
    std::vector<std::size_t> problem_order;    // indices sorted by (name, dim)
};

SortedCampaign sorted_orders(const Campaign& campaign) {
    SortedCampaign s;
    s.algorithm_order.resize(campaign.algorithms.size());
    for (std::size_t i = 0; i < s.algorithm_order.size(); ++i) {
        s.algorithm_order[i] = i;
    }
    std::sort(s.algorithm_order.begin(), s.algorithm_order.end(),
              [&](std::size_t a, std::size_t b) {
                  return campaign.algorithms[a].name < campaign.algorithms[b].name;
              });
    s.problem_order.resize(campaign.problems.size());
    for (std::size_t i = 0; i < s.problem_order.size(); ++i) {
        s.problem_order[i] = i;
    }
    std::sort(s.problem_order.begin(), s.problem_order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = campaign.problems[a];
        const auto& pb = campaign.problems[b];
        return std::tie(pa.name, pa.dimension) < std::tie(pb.name, pb.dimension);
    });
    return s;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("I/O error: cannot write '" + path.string() + "'");
    }
    return out;
}

const char* verdict_name(stats::Verdict v) {
    switch (v) {
        case stats::Verdict::win: return "win";
        case stats::Verdict::tie: return "tie";
        case stats::Verdict::loss: return "loss";
    }
    return "tie";
}

}  // namespace

void run_campaign(const Campaign& campaign) {
    if (campaign.algorithms.empty() || campaign.problems.empty()) {
        throw std::invalid_argument("run_campaign: empty campaign");
    }
    if (campaign.runs < 1 || campaign.population_size < 2 || campaign.max_iterations < 1) {
        throw std::invalid_argument("run_campaign: invalid run configuration");
    }

    // Fail on an unwritable destination before any run starts.
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(campaign.output_dir / "traces", ec);
    if (ec) {
        throw std::runtime_error("I/O error: cannot create output directory '" +
                                 campaign.output_dir.string() + "': " + ec.message());
    }
    { open_output(campaign.output_dir / "results.csv"); }

    std::vector<Problem> problems;
    problems.reserve(campaign.problems.size());
    for (const auto& spec : campaign.problems) {
        problems.push_back(
            make_problem(spec.name, catalog_fixed_dimension(spec.name) ? 0 : spec.dimension));
    }

    const std::size_t n_algorithms = campaign.algorithms.size();
    const std::size_t n_problems = campaign.problems.size();
    const std::size_t n_runs = static_cast<std::size_t>(campaign.runs);
    const std::size_t n_jobs = n_algorithms * n_problems * n_runs;
    std::vector<JobResult> results(n_jobs);

    auto job_of = [&](std::size_t ai, std::size_t pi, std::size_t run) {
        return (ai * n_problems + pi) * n_runs + run;
    };

    std::atomic<std::size_t> next_job{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error_message;

    auto worker = [&] {
        while (true) {
            const std::size_t job = next_job.fetch_add(1);
            if (job >= n_jobs || failed.load()) {
                return;
            }
            const std::size_t run = job % n_runs;
            const std::size_t pi = (job / n_runs) % n_problems;
            const std::size_t ai = job / (n_runs * n_problems);
            try {
                const auto& algo = campaign.algorithms[ai];
                RunConfig config;
                config.population_size = campaign.population_size;
                config.max_iterations = campaign.max_iterations;
                config.runs = 1;
                config.seed = derive_seed(campaign.base_seed, algo.name,
                                          problem_key(campaign.problems[pi]),
                                          static_cast<int>(run));
                config.params = algo.params;
                config.strategy = algo.strategy;
                const auto start = std::chrono::steady_clock::now();
                auto [record, trace] = run_variant(problems[pi], config);
                const auto stop = std::chrono::steady_clock::now();
                JobResult& slot = results[job];
                slot.record = std::move(record);
                slot.trace = std::move(trace);
                slot.wall_ms =
                    std::chrono::duration<double, std::milli>(stop - start).count();
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) {
                    error_message = e.what();
                }
                return;
            }
        }
    };

    const int n_workers = std::max(1, campaign.workers);
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(n_workers));
        for (int i = 0; i < n_workers; ++i) {
            threads.emplace_back(worker);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failed.load()) {
        throw std::runtime_error("run_campaign: " + error_message);
    }

    const SortedCampaign order = sorted_orders(campaign);

    // results.csv
    {
        auto out = open_output(campaign.output_dir / "results.csv");
        out << "algorithm,problem,dim,run_index,seed,best_fitness,best_position";
        if (campaign.include_timing) {
            out << ",wall_ms";
        }
        out << "\n";
        for (std::size_t ao : order.algorithm_order) {
            for (std::size_t po : order.problem_order) {
                for (std::size_t run = 0; run < n_runs; ++run) {
                    const JobResult& r = results[job_of(ao, po, run)];
                    out << campaign.algorithms[ao].name << ',' << campaign.problems[po].name
                        << ',' << campaign.problems[po].dimension << ',' << run << ','
                        << r.record.seed << ',' << fmt(r.record.best.fitness) << ','
                        << join_positions(r.record.best.position);
                    if (campaign.include_timing) {
                        out << ',' << fmt(r.wall_ms);
                    }
                    out << "\n";
                }
            }
        }
    }

    // summary.csv
    {
        auto out = open_output(campaign.output_dir / "summary.csv");
        out << "algorithm,problem,dim,mean,std,best\n";
        for (std::size_t ao : order.algorithm_order) {
            for (std::size_t po : order.problem_order) {
                Vec finals(n_runs);
                for (std::size_t run = 0; run < n_runs; ++run) {
                    finals[run] = results[job_of(ao, po, run)].record.best.fitness;
                }
                const auto s = stats::summarize(finals);
                out << campaign.algorithms[ao].name << ',' << campaign.problems[po].name << ','
                    << campaign.problems[po].dimension << ',' << fmt(s.mean) << ','
                    << fmt(s.stddev) << ',' << fmt(s.best) << "\n";
            }
        }
    }

    // traces/<algorithm>_<problem-dim>_<run>.csv
    for (std::size_t ao : order.algorithm_order) {
        for (std::size_t po : order.problem_order) {
            for (std::size_t run = 0; run < n_runs; ++run) {
                const JobResult& r = results[job_of(ao, po, run)];
                const std::string file = campaign.algorithms[ao].name + "_" +
                                         problem_key(campaign.problems[po]) + "_" +
                                         std::to_string(run) + ".csv";
                auto out = open_output(campaign.output_dir / "traces" / file);
                out << "iteration,best_so_far\n";
                for (std::size_t t = 0; t < r.trace.best_so_far.size(); ++t) {
                    out << (t + 1) << ',' << fmt(r.trace.best_so_far[t]) << "\n";
                }
            }
        }
    }

    // stats.csv: pairwise rank-sum vs the baseline, win/tie/loss tallies,
    // and Friedman average ranks over the per-problem means.
    {
        auto out = open_output(campaign.output_dir / "stats.csv");
        out << "kind,algorithm,problem,dim,statistic,p_value,verdict,avg_rank,wins,ties,losses\n";
        std::size_t baseline_index = 0;
        for (std::size_t i = 0; i < n_algorithms; ++i) {
            if (campaign.algorithms[i].name == campaign.baseline) {
                baseline_index = i;
            }
        }
        auto finals_of = [&](std::size_t ai, std::size_t pi) {
            Vec finals(n_runs);
            for (std::size_t run = 0; run < n_runs; ++run) {
                finals[run] = results[job_of(ai, pi, run)].record.best.fitness;
            }
            return finals;
        };

        if (n_algorithms >= 2) {
            for (std::size_t ao : order.algorithm_order) {
                if (ao == baseline_index) {
                    continue;
                }
                std::vector<stats::TestResult> per_problem;
                for (std::size_t po : order.problem_order) {
                    const auto test =
                        stats::wilcoxon_rank_sum(finals_of(baseline_index, po), finals_of(ao, po));
                    per_problem.push_back(test);
                    out << "wilcoxon," << campaign.algorithms[ao].name << ','
                        << campaign.problems[po].name << ',' << campaign.problems[po].dimension
                        << ',' << fmt(test.statistic) << ',' << fmt(test.p_value) << ','
                        << verdict_name(test.verdict) << ",,,,\n";
                }
                const auto wtl = stats::win_tie_loss(per_problem);
                out << "win_tie_loss," << campaign.algorithms[ao].name << ",,,,,,," << wtl.wins
                    << ',' << wtl.ties << ',' << wtl.losses << "\n";
            }
        }
        if (n_algorithms >= 2 && n_problems >= 2) {
            std::vector<Vec> matrix;  // rows: problems, cols: algorithms (sorted)
            for (std::size_t po : order.problem_order) {
                Vec row;
                for (std::size_t ao : order.algorithm_order) {
                    row.push_back(stats::summarize(finals_of(ao, po)).mean);
                }
                matrix.push_back(std::move(row));
            }
            const auto fr = stats::friedman(matrix);
            out << "friedman,,,," << fmt(fr.statistic) << ',' << fmt(fr.p_value) << ",,,,,\n";
            for (std::size_t col = 0; col < order.algorithm_order.size(); ++col) {
                out << "friedman_rank,"
                    << campaign.algorithms[order.algorithm_order[col]].name << ",,,,,,"
                    << fmt(fr.average_ranks[col]) << ",,,\n";
            }
        }
    }
}

}  // namespace bench
}  // namespace gazelle
