#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "thurstonlab/bundle.hpp"
#include "thurstonlab/polytope.hpp"

namespace thurstonlab {

// Deterministic splitmix64 generator: identical streams for a given seed on
// every platform and thread count.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return range(0, 99) < percent; }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Shared instance generators.
DualBall random_ball(Rng& rng, int dim, long long coord_bound, int npoints);
LaurentPoly random_laurent(Rng& rng, int nvars, int support_size, long long coeff_bound,
                           long long exp_bound);
SWSupport random_support(Rng& rng, int rank, int extra, long long value_bound);

struct FuzzReport {
    long long trials = 0;
    long long failures = 0;
    nlohmann::json first_failure; // reproducer of the lowest-index failure
    double seconds = 0;
};

// Trials fan out over a worker pool; reports are assembled by trial index,
// so the output is byte-stable for a given seed.
FuzzReport run_observation_fuzz(long long trials, std::uint64_t seed, bool parallel = true);
FuzzReport run_claim_fuzz(long long trials, std::uint64_t seed, bool parallel = true);
FuzzReport run_norms_fuzz(long long trials, std::uint64_t seed, bool parallel = true);

} // namespace thurstonlab
