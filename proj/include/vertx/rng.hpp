#pragma once

#include <cstdint>

namespace vertx {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen over std::mt19937_64
/// plus <random> distributions because the distribution algorithms are not
/// pinned by the C++ standard; everything here is bit-reproducible across
/// platforms and toolchains.
///
/// Derived values:
///   next()              raw 64-bit output
///   uniform_index(n)    next() % n  (modulo; bias is irrelevant at our n)
///   uniform_real(a, b)  a + (next() >> 11) * 2^-53 * (b - a)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_index(std::uint64_t n) { return next() % n; }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    /// Single fair bit.
    bool uniform_bool() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace vertx
