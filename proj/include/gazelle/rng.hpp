#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gazelle {

/// Deterministic random stream used by every stochastic operation.
///
/// The engine is std::mt19937_64, whose word sequence is fixed by the
/// standard. The floating-point mappings are implemented here instead of
/// relying on std::uniform_real_distribution / std::normal_distribution,
/// which are implementation-defined and would break seed reproducibility
/// across standard libraries.
///
/// Draw accounting (relied on by the replay tests):
///   uniform()        consumes 1 engine word:  (w >> 11) * 2^-53  in [0,1)
///   normal()         consumes 2 engine words: Box-Muller cosine branch,
///                    u1 = ((w1 >> 11)+1) * 2^-53 in (0,1], u2 as uniform()
///   uniform_index(n) consumes 1 engine word
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * kTwoPowMinus53; }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Standard normal draw, sqrt(-2 ln u1) * cos(2 pi u2).
    double normal();

    /// Uniform index in {0, ..., n-1}.
    int uniform_index(int n) { return static_cast<int>(uniform() * n); }

    /// Next raw engine word. Exposed so tests can assert two streams are
    /// position-aligned after replaying an operation's documented draws.
    std::uint64_t raw() { return engine_(); }

  private:
    static constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
    std::mt19937_64 engine_;
};

/// Derives the per-run seed for (algorithm, problem, run) from a campaign
/// base seed. Depends only on the names and the run index, so reordering
/// or extending a campaign never changes existing runs.
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view algorithm,
                          std::string_view problem, int run_index);

}  // namespace gazelle
