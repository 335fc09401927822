#pragma once

#include <string>
#include <vector>

#include "gazelle/core.hpp"

namespace gazelle {
namespace stats {

/// Final best values of one algorithm on one problem, one entry per run.
struct SampleSet {
    std::string algorithm;
    std::string problem;
    Vec values;
};

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation (n-1), 0 for n = 1
    double best = 0.0;    // minimum
};

Summary summarize(const Vec& values);
Summary summarize(const SampleSet& samples);

enum class Verdict { win, tie, loss };

/// Two-sided rank-sum result. The verdict is from the first argument's
/// perspective: win when p < 0.05 and x has the lower median.
struct TestResult {
    double statistic = 0.0;  // rank sum of x
    double p_value = 1.0;
    Verdict verdict = Verdict::tie;
};

/// Two-sided Wilcoxon rank-sum test. Uses exact enumeration when
/// n_x + n_y <= 12 and there are no ties, otherwise the normal
/// approximation with tie and continuity corrections.
TestResult wilcoxon_rank_sum(const Vec& x, const Vec& y);

/// Exact two-sided p by enumerating all C(n, n_x) rank assignments.
/// Requires no ties and n_x + n_y <= 20. p = min(1, 2 min(P(W<=w), P(W>=w))).
double wilcoxon_exact_p(const Vec& x, const Vec& y);

/// Normal-approximation two-sided p (tie-corrected variance, continuity
/// correction), usable at any sample size.
double wilcoxon_normal_p(const Vec& x, const Vec& y);

struct FriedmanResult {
    double statistic = 0.0;  // chi-square with k-1 dof
    double p_value = 1.0;
    Vec average_ranks;  // one per algorithm (column); lower is better
};

/// Friedman test on a problems x algorithms matrix of performance values
/// (lower better). Within-row average ranks for ties; classic chi-square
/// statistic 12n/(k(k+1)) * sum_j (Rbar_j - (k+1)/2)^2.
/// Requires >= 2 rows and >= 2 columns of equal length.
FriedmanResult friedman(const std::vector<Vec>& rows);

struct WinTieLoss {
    int wins = 0;
    int ties = 0;
    int losses = 0;
};

/// Tallies per-problem verdicts of a baseline against one competitor.
WinTieLoss win_tie_loss(const std::vector<TestResult>& per_problem);

/// Upper tail of the chi-square distribution, Q(dof/2, x/2), via the
/// regularized incomplete gamma function (absolute accuracy ~1e-12).
double chi_square_upper_tail(double x, int dof);

/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace stats
}  // namespace gazelle
