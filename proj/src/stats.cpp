#include "gazelle/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gazelle {
namespace stats {

Summary summarize(const Vec& values) {
    if (values.empty()) {
        throw std::invalid_argument("summarize: empty sample");
    }
    Summary s;
    s.best = values.front();
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t count = 0;
    for (double v : values) {  // Welford
        ++count;
        const double delta = v - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (v - mean);
        s.best = std::min(s.best, v);
    }
    s.mean = mean;
    s.stddev = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1)) : 0.0;
    return s;
}

Summary summarize(const SampleSet& samples) { return summarize(samples.values); }

namespace {

struct RankedData {
    Vec ranks_x;        // ranks of x within the pooled sample (average ties)
    double rank_sum_x;  // W
    double tie_term;    // sum over tie groups of (t^3 - t)
    bool has_ties;
    std::size_t nx;
    std::size_t ny;
};

RankedData rank_samples(const Vec& x, const Vec& y) {
    if (x.empty() || y.empty()) {
        throw std::invalid_argument("wilcoxon_rank_sum: both samples must be non-empty");
    }
    struct Item {
        double value;
        bool from_x;
    };
    std::vector<Item> pooled;
    pooled.reserve(x.size() + y.size());
    for (double v : x) {
        pooled.push_back({v, true});
    }
    for (double v : y) {
        pooled.push_back({v, false});
    }
    std::stable_sort(pooled.begin(), pooled.end(),
                     [](const Item& a, const Item& b) { return a.value < b.value; });

    RankedData out;
    out.nx = x.size();
    out.ny = y.size();
    out.rank_sum_x = 0.0;
    out.tie_term = 0.0;
    out.has_ties = false;

    const std::size_t n = pooled.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pooled[j].value == pooled[i].value) {
            ++j;
        }
        const double t = static_cast<double>(j - i);
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        if (j - i > 1) {
            out.has_ties = true;
            out.tie_term += t * t * t - t;
        }
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].from_x) {
                out.rank_sum_x += avg_rank;
            }
        }
        i = j;
    }
    return out;
}

double median_of(Vec v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Number of k-subsets of {1..n} with each possible rank sum.
std::vector<std::vector<double>> subset_sum_counts(std::size_t n, std::size_t k) {
    const std::size_t max_sum = n * (n + 1) / 2;
    std::vector<std::vector<double>> cnt(k + 1, std::vector<double>(max_sum + 1, 0.0));
    cnt[0][0] = 1.0;
    for (std::size_t value = 1; value <= n; ++value) {
        for (std::size_t taken = std::min(value, k); taken >= 1; --taken) {
            for (std::size_t s = max_sum; s >= value; --s) {
                cnt[taken][s] += cnt[taken - 1][s - value];
            }
        }
    }
    return cnt;
}

}  // namespace

double wilcoxon_exact_p(const Vec& x, const Vec& y) {
    const RankedData data = rank_samples(x, y);
    if (data.has_ties) {
        throw std::invalid_argument("wilcoxon_exact_p: ties present");
    }
    const std::size_t n = data.nx + data.ny;
    if (n > 20) {
        throw std::invalid_argument("wilcoxon_exact_p: pooled sample too large");
    }
    const auto cnt = subset_sum_counts(n, data.nx);
    const double w = data.rank_sum_x;  // integer-valued when there are no ties
    double total = 0.0;
    double below_or_equal = 0.0;
    double above_or_equal = 0.0;
    for (std::size_t s = 0; s < cnt[data.nx].size(); ++s) {
        const double c = cnt[data.nx][s];
        total += c;
        if (static_cast<double>(s) <= w) {
            below_or_equal += c;
        }
        if (static_cast<double>(s) >= w) {
            above_or_equal += c;
        }
    }
    return std::min(1.0, 2.0 * std::min(below_or_equal, above_or_equal) / total);
}

double wilcoxon_normal_p(const Vec& x, const Vec& y) {
    const RankedData data = rank_samples(x, y);
    const double nx = static_cast<double>(data.nx);
    const double ny = static_cast<double>(data.ny);
    const double n = nx + ny;
    const double mean = nx * (n + 1.0) / 2.0;
    const double variance =
        nx * ny / 12.0 * ((n + 1.0) - data.tie_term / (n * (n - 1.0)));
    if (variance <= 0.0) {
        return 1.0;  // every value tied
    }
    double diff = data.rank_sum_x - mean;
    // Continuity correction toward the mean.
    if (diff > 0.5) {
        diff -= 0.5;
    } else if (diff < -0.5) {
        diff += 0.5;
    } else {
        diff = 0.0;
    }
    const double z = diff / std::sqrt(variance);
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

TestResult wilcoxon_rank_sum(const Vec& x, const Vec& y) {
    const RankedData data = rank_samples(x, y);
    TestResult result;
    result.statistic = data.rank_sum_x;
    if (!data.has_ties && data.nx + data.ny <= 12) {
        result.p_value = wilcoxon_exact_p(x, y);
    } else {
        result.p_value = wilcoxon_normal_p(x, y);
    }
    if (result.p_value >= 0.05) {
        result.verdict = Verdict::tie;
    } else {
        const double mx = median_of(x);
        const double my = median_of(y);
        result.verdict = mx < my ? Verdict::win : (mx > my ? Verdict::loss : Verdict::tie);
    }
    return result;
}

namespace {

// Average ranks of one row, ascending (rank 1 = smallest value).
Vec row_ranks(const Vec& row) {
    const std::size_t k = row.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
    Vec ranks(k, 0.0);
    std::size_t i = 0;
    while (i < k) {
        std::size_t j = i;
        while (j < k && row[order[j]] == row[order[i]]) {
            ++j;
        }
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t m = i; m < j; ++m) {
            ranks[order[m]] = avg;
        }
        i = j;
    }
    return ranks;
}

}  // namespace

FriedmanResult friedman(const std::vector<Vec>& rows) {
    if (rows.size() < 2) {
        throw std::invalid_argument("friedman: need at least 2 problems (rows)");
    }
    const std::size_t k = rows.front().size();
    if (k < 2) {
        throw std::invalid_argument("friedman: need at least 2 algorithms (columns)");
    }
    for (const auto& row : rows) {
        if (row.size() != k) {
            throw std::invalid_argument("friedman: ragged results matrix");
        }
    }
    const double n = static_cast<double>(rows.size());
    FriedmanResult result;
    result.average_ranks.assign(k, 0.0);
    for (const auto& row : rows) {
        const Vec ranks = row_ranks(row);
        for (std::size_t j = 0; j < k; ++j) {
            result.average_ranks[j] += ranks[j];
        }
    }
    for (auto& r : result.average_ranks) {
        r /= n;
    }
    const double kk = static_cast<double>(k);
    double sum_sq = 0.0;
    for (double r : result.average_ranks) {
        const double d = r - (kk + 1.0) / 2.0;
        sum_sq += d * d;
    }
    result.statistic = 12.0 * n / (kk * (kk + 1.0)) * sum_sq;
    result.p_value = chi_square_upper_tail(result.statistic, static_cast<int>(k) - 1);
    return result;
}

WinTieLoss win_tie_loss(const std::vector<TestResult>& per_problem) {
    WinTieLoss counts;
    for (const auto& r : per_problem) {
        switch (r.verdict) {
            case Verdict::win: ++counts.wins; break;
            case Verdict::tie: ++counts.ties; break;
            case Verdict::loss: ++counts.losses; break;
        }
    }
    return counts;
}

namespace {

// Regularized lower incomplete gamma P(a, x); series for x < a+1,
// continued fraction (modified Lentz) otherwise.
double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) {
        throw std::invalid_argument("gamma_p: domain error");
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-16) {
                break;
            }
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Q via continued fraction, then P = 1 - Q.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    const double q = std::exp(-x + a * std::log(x) - lg) * h;
    return 1.0 - q;
}

}  // namespace

double chi_square_upper_tail(double x, int dof) {
    if (dof < 1) {
        throw std::invalid_argument("chi_square_upper_tail: dof must be >= 1");
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return 1.0 - gamma_p(static_cast<double>(dof) / 2.0, x / 2.0);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace stats
}  // namespace gazelle
