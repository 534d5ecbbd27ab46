#pragma once

// Deterministic, platform-independent PRNG used for instance generation and
// fuzz campaigns. std:: distributions are implementation-defined, so uniform
// deviates are derived from raw splitmix64 output directly.

#include <cmath>
#include <cstdint>

#include "pierce/geometry.hpp"

namespace pierce {

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0xc0ffee123456789ULL) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t uniform_int(uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Uniform over the disk of the given radius.
    Point2 in_disk(double radius) {
        double a = uniform(0.0, 2.0 * M_PI);
        double r = radius * std::sqrt(uniform());
        return {r * std::cos(a), r * std::sin(a)};
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

  private:
    uint64_t state_;
};

}  // namespace pierce
