#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "navbench/geometry.hpp"

namespace navbench {

/// Deterministic random source. All simulation code draws through this class
/// instead of std::*_distribution, whose output is implementation-defined.
/// Draw counts per call are fixed: uniform* consume one engine step,
/// normal() consumes exactly two.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be >= 1.
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    /// Box-Muller, no spare caching.
    double normal(double mu, double sigma) {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(2.0 * kPi * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace navbench
