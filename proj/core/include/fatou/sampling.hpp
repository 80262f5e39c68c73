#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "fatou/geometry.hpp"

// Deterministic sampling. Every stochastic routine takes a SampleStream
// seeded from (run seed, task tag) so reports are reproducible and sample
// sets are nested under refinement.

namespace fatou {

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : rng_(seed) {}
    SampleStream(std::uint64_t seed, std::string_view tag) : rng_(seed ^ fnv1a(tag)) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    double angle() { return uniform(0.0, 2.0 * 3.14159265358979323846); }

    /// Modulus log-uniform in [lo, hi], phase uniform.
    Complex annulus(double lo, double hi) {
        const double r = std::exp(uniform(std::log(lo), std::log(hi)));
        const double t = angle();
        return {r * std::cos(t), r * std::sin(t)};
    }

    Complex disc(Complex center, double radius) {
        const double r = radius * std::sqrt(uniform(0.0, 1.0));
        const double t = angle();
        return center + Complex{r * std::cos(t), r * std::sin(t)};
    }

    std::mt19937_64& raw() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace fatou
