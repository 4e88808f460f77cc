#pragma once

// Seeded randomized property testing of the whole library: generates convex
// support functions, runs every cross-route and inequality invariant on them,
// and greedily minimizes the first counterexample. Deterministic for a fixed
// seed regardless of the number of worker threads (each trial derives its own
// generator from seed + trial index, and results are aggregated in trial
// order).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hedgehog/trig_poly.hpp"

namespace hedgehog::fuzz {

struct Options {
    std::uint64_t seed = 42;
    int trials = 100;
    int max_degree = 12;
    int k_min = 3;
    int k_max = 8;
    int jobs = 1;
};

struct Violation {
    int trial = -1;
    int k = 0;  // 0 for k-independent checks
    std::string check;
    std::string detail;
    TrigPoly curve;
    TrigPoly minimized;
};

struct Result {
    int trials = 0;
    long long checks = 0;
    long long passed = 0;
    long long violations = 0;
    int numerical_failures = 0;
    std::optional<Violation> first;
    std::map<std::string, long long> failures_by_check;
};

/// Convex support-function generator: a0 uniform in [10, 200], harmonic
/// amplitudes decaying as n^-2, rejection-resampled until convex. Depends
/// only on (seed, trial, max_degree).
TrigPoly random_convex_support(std::uint64_t seed, int trial, int max_degree);

/// One named invariant. Returns a failure detail, or nullopt on pass.
/// k-independent checks ignore their k argument (invoked with k = 0).
struct Check {
    std::string name;
    bool per_k = false;
    std::function<std::optional<std::string>(const TrigPoly& support, int k)> run;
};

/// The registry backing both the fuzzer and the seeded acceptance corpus.
const std::vector<Check>& invariant_checks();

/// Runs the whole registry on one curve; per-k checks run for each k in
/// [k_min, k_max]. The sink receives every outcome.
using CheckSink =
    std::function<void(const std::string& name, int k, bool pass, const std::string& detail)>;
void run_invariant_suite(const TrigPoly& support, int k_min, int k_max,
                         const CheckSink& sink);

Result run(const Options& options);

/// Greedy coefficient zeroing: repeatedly zeroes single a/b coefficients as
/// long as the given check still fails, returning the reduced curve.
TrigPoly minimize_counterexample(const TrigPoly& start, const Check& check, int k);

}  // namespace hedgehog::fuzz
