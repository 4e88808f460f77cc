#pragma once

// Shared fixtures for the test suites: the worked example curves and a small
// deterministic generator for randomized properties.

#include <cmath>
#include <cstdint>
#include <vector>

#include "hedgehog/hedgehog.hpp"
#include "hedgehog/trig_poly.hpp"

namespace testutil {

using hedgehog::Harmonic;
using hedgehog::Hedgehog;
using hedgehog::TrigPoly;

// h = 137 + 21 cos 2s + sin 5s + cos 6s - (1/3) sin 9s + (1/3) sin 10s
inline TrigPoly golden_support() {
    return TrigPoly(137.0, {{2, 21.0, 0.0},
                            {5, 0.0, 1.0},
                            {6, 1.0, 0.0},
                            {9, 0.0, -1.0 / 3.0},
                            {10, 0.0, 1.0 / 3.0}});
}

// h = 130 + sin 5s + sin 10s: every circumscribed pentagon is regular
inline TrigPoly pentagon_support() {
    return TrigPoly(130.0, {{5, 0.0, 1.0}, {10, 0.0, 1.0}});
}

// h = 20 + sin 2s + cos 3s
inline TrigPoly oval20_support() {
    return TrigPoly(20.0, {{2, 0.0, 1.0}, {3, 1.0, 0.0}});
}

// h = 30 + sin 2s + cos 3s + cos 4s
inline TrigPoly oval30_support() {
    return TrigPoly(30.0, {{2, 0.0, 1.0}, {3, 1.0, 0.0}, {4, 1.0, 0.0}});
}

// h = 10 + sin 2s + cos 3s + cos 6s (singular hedgehog)
inline TrigPoly singular10_support() {
    return TrigPoly(10.0, {{2, 0.0, 1.0}, {3, 1.0, 0.0}, {6, 1.0, 0.0}});
}

// h = 10 + sin 2s + cos 3s + cos 4s + cos 5s (nontrivial midpoint set)
inline TrigPoly midpoint10_support() {
    return TrigPoly(10.0, {{2, 0.0, 1.0}, {3, 1.0, 0.0}, {4, 1.0, 0.0}, {5, 1.0, 0.0}});
}

// The three k = 4 midpoint-area sign cases.
inline TrigPoly sign_positive_support() {
    return TrigPoly(81.0, {{3, 0.0, 1.0}, {5, 0.0, -1.0}, {7, 0.0, 1.0}});
}
inline TrigPoly sign_negative_support() {
    return TrigPoly(105.0, {{3, 0.0, 1.0}, {5, 0.0, -2.0}, {7, 0.0, 1.0}});
}
inline TrigPoly sign_zero_support() {
    return TrigPoly(108.0, {{3, 0.0, std::sqrt(2.0)}, {5, 0.0, -2.0}, {7, 0.0, 1.0}});
}

inline double rel_err(double value, double expected) {
    return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    int uniform_int(int lo, int hi) {
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

/// Random support function of the given degree; convex when the scale is
/// small against a0.
inline TrigPoly random_support(Rng& rng, int degree, double a0_lo = 10.0,
                               double a0_hi = 200.0, double scale = 2.0) {
    std::vector<Harmonic> harmonics;
    for (int n = 1; n <= degree; ++n) {
        const double decay = scale / (double(n) * n);
        harmonics.push_back(
            {n, decay * rng.uniform(-1.0, 1.0), decay * rng.uniform(-1.0, 1.0)});
    }
    return TrigPoly(rng.uniform(a0_lo, a0_hi), std::move(harmonics));
}

inline TrigPoly random_convex_support(Rng& rng, int degree) {
    for (;;) {
        TrigPoly candidate = random_support(rng, degree, 10.0, 200.0, 4.0);
        if (Hedgehog(candidate).is_convex()) return candidate;
    }
}

}  // namespace testutil
