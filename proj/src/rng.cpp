#include "gazelle/rng.hpp"

#include <cmath>

namespace gazelle {

double RngStream::normal() {
    const std::uint64_t w1 = engine_();
    const std::uint64_t w2 = engine_();
    // u1 in (0,1] so the log is always finite.
    const double u1 = static_cast<double>((w1 >> 11) + 1) * kTwoPowMinus53;
    const double u2 = static_cast<double>(w2 >> 11) * kTwoPowMinus53;
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view algorithm,
                          std::string_view problem, int run_index) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ fnv1a(algorithm));
    h = splitmix64(h ^ fnv1a(problem));
    h = splitmix64(h ^ static_cast<std::uint64_t>(run_index));
    return h;
}

}  // namespace gazelle
