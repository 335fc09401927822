#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gazelle/bench.hpp"

using namespace gazelle;
using namespace gazelle::bench;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("gazelle-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

fs::path write_config(const TempDir& dir, const std::string& name, const std::string& body) {
    const fs::path file = dir.path / name;
    std::ofstream out(file);
    out << body;
    return file;
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    return lines;
}

const char* kTinyCampaign = R"({
  "algorithms": [{"name": "goa"}, {"name": "msigoa"}],
  "problems": [{"name": "sphere", "dim": 2}],
  "population": 6, "iterations": 5, "runs": 2, "seed": 7
})";

}  // namespace

TEST_CASE("parse_config applies protocol defaults") {
    TempDir dir("cfg");
    const auto file = write_config(dir, "c.json", R"({
        "problems": [{"name": "sphere", "dim": 10}],
        "algorithms": [{"name": "msigoa"}]
    })");
    const Campaign campaign = parse_config(file);
    CHECK(campaign.population_size == 30);
    CHECK(campaign.max_iterations == 500);
    CHECK(campaign.runs == 51);
    CHECK(campaign.base_seed == 0);
    CHECK(campaign.baseline == "msigoa");
    CHECK(campaign.algorithms.size() == 1);
    CHECK(campaign.algorithms[0].strategy.use_ibuf);
    CHECK(campaign.problems[0].dimension == 10);
}

TEST_CASE("parse_config rejects bad inputs with named diagnostics") {
    TempDir dir("cfg-bad");
    auto expect_error = [&](const std::string& body, const std::string& needle) {
        const auto file = write_config(dir, "bad.json", body);
        try {
            parse_config(file);
            FAIL_CHECK("expected a config error for: " << needle);
        } catch (const std::runtime_error& e) {
            CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                          "got: " << e.what());
        }
    };

    expect_error(R"({"problems":[{"name":"sphere","dim":10}],
                     "algorithms":[{"name":"msigoa"}], "runs": 0})",
                 "runs");
    expect_error(R"({"problems":[{"name":"sphere","dim":10}],
                     "algorithms":[{"name":"msigoa"}], "wibble": 1})",
                 "wibble");
    expect_error(R"({"problems":[{"name":"nosuch","dim":10}],
                     "algorithms":[{"name":"msigoa"}]})",
                 "nosuch");
    expect_error(R"({"problems":[{"name":"sphere","dim":10}],
                     "algorithms":[{"name":"fancy"}]})",
                 "fancy");
    expect_error(R"({"problems":[{"name":"sphere"}],
                     "algorithms":[{"name":"msigoa"}]})",
                 "dim");
    expect_error(R"({"problems":[{"name":"spring","dim":5}],
                     "algorithms":[{"name":"msigoa"}]})",
                 "fixed dimension");
    expect_error(R"({"problems":[{"name":"sphere","dim":10}],
                     "algorithms":[{"name":"msigoa"}], "baseline":"goa"})",
                 "baseline");
    expect_error("{not json", "malformed");
}

TEST_CASE("parse_config accepts custom algorithms with explicit flags") {
    TempDir dir("cfg-custom");
    const auto file = write_config(dir, "c.json", R"({
        "problems": [{"name": "spring"}],
        "algorithms": [
            {"name": "goa-alt", "ibuf": false, "apts": false, "dprm": false,
             "cf_variant": "decaying", "s": 0.9},
            {"name": "msigoa", "nd_multiplier": 10, "dprm_scope": "non_improved",
             "apts_brownian_exponent": "one_over_T", "dprm_acceptance": "greedy"}
        ],
        "runs": 3
    })");
    const Campaign campaign = parse_config(file);
    CHECK(campaign.problems[0].dimension == 3);  // resolved fixed dimension
    CHECK(campaign.algorithms[0].params.cf_variant == CfVariant::decaying);
    CHECK(campaign.algorithms[0].params.grazing_speed == 0.9);
    CHECK(campaign.algorithms[1].strategy.nd_multiplier == 10);
    CHECK(campaign.algorithms[1].strategy.dprm_scope == DprmScope::non_improved);
    CHECK(campaign.algorithms[1].strategy.apts_brownian_exponent ==
          AptsBrownianExponent::one_over_T);
    CHECK(campaign.algorithms[1].strategy.dprm_acceptance == DprmAcceptance::greedy);
    CHECK(campaign.algorithms[0].strategy.dprm_acceptance == DprmAcceptance::replace);
}

TEST_CASE("run_campaign writes the expected files and row counts") {
    TempDir dir("run");
    const auto file = write_config(dir, "c.json", kTinyCampaign);
    Campaign campaign = parse_config(file);
    campaign.output_dir = dir.path / "out";
    campaign.include_timing = false;
    run_campaign(campaign);

    const std::string results = slurp(campaign.output_dir / "results.csv");
    CHECK(count_lines(results) == 1 + 2 * 1 * 2);  // header + algos*problems*runs
    CHECK(results.find("wall_ms") == std::string::npos);
    CHECK(results.find("\r") == std::string::npos);  // LF endings

    const std::string summary = slurp(campaign.output_dir / "summary.csv");
    CHECK(count_lines(summary) == 1 + 2);

    CHECK(fs::exists(campaign.output_dir / "traces" / "goa_sphere-2_0.csv"));
    CHECK(fs::exists(campaign.output_dir / "traces" / "msigoa_sphere-2_1.csv"));
    const std::string trace = slurp(campaign.output_dir / "traces" / "goa_sphere-2_0.csv");
    CHECK(count_lines(trace) == 1 + 5);  // header + iterations

    const std::string stats_csv = slurp(campaign.output_dir / "stats.csv");
    CHECK(stats_csv.find("wilcoxon,msigoa,sphere") != std::string::npos);
    CHECK(stats_csv.find("win_tie_loss,msigoa") != std::string::npos);
}

TEST_CASE("campaign output is byte-identical across reruns and worker counts") {
    TempDir dir("det");
    const auto file = write_config(dir, "c.json", kTinyCampaign);
    Campaign campaign = parse_config(file);
    campaign.include_timing = false;

    campaign.output_dir = dir.path / "a";
    campaign.workers = 1;
    run_campaign(campaign);
    campaign.output_dir = dir.path / "b";
    campaign.workers = 4;
    run_campaign(campaign);

    for (const char* name : {"results.csv", "summary.csv", "stats.csv"}) {
        CHECK(slurp(dir.path / "a" / name) == slurp(dir.path / "b" / name));
    }
    CHECK(slurp(dir.path / "a" / "traces" / "msigoa_sphere-2_0.csv") ==
          slurp(dir.path / "b" / "traces" / "msigoa_sphere-2_0.csv"));
}

TEST_CASE("adding an algorithm leaves other algorithms' rows unchanged") {
    TempDir dir("stable");
    const auto small = write_config(dir, "small.json", kTinyCampaign);
    Campaign campaign = parse_config(small);
    campaign.include_timing = false;
    campaign.output_dir = dir.path / "small-out";
    run_campaign(campaign);

    const auto bigger = write_config(dir, "big.json", R"({
      "algorithms": [{"name": "goa"}, {"name": "msigoa"}, {"name": "goa-2"}],
      "problems": [{"name": "sphere", "dim": 2}],
      "population": 6, "iterations": 5, "runs": 2, "seed": 7
    })");
    Campaign extended = parse_config(bigger);
    extended.include_timing = false;
    extended.output_dir = dir.path / "big-out";
    run_campaign(extended);

    // every results row of the small campaign appears verbatim in the big one
    std::istringstream small_rows(slurp(campaign.output_dir / "results.csv"));
    const std::string big = slurp(extended.output_dir / "results.csv");
    std::string line;
    std::getline(small_rows, line);  // skip header
    while (std::getline(small_rows, line)) {
        CHECK_MESSAGE(big.find(line) != std::string::npos, "missing row: " << line);
    }
}

TEST_CASE("run_campaign fails before running on an unwritable destination") {
    TempDir dir("rofail");
    const auto file = write_config(dir, "c.json", kTinyCampaign);
    Campaign campaign = parse_config(file);
    campaign.output_dir = "/proc/definitely-not-writable/out";
    CHECK_THROWS_AS(run_campaign(campaign), std::runtime_error);
}
