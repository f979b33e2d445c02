// Timing comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thurstonlab/exceptional.hpp"
#include "thurstonlab/fuzz.hpp"
#include "thurstonlab/niceness.hpp"

using namespace thurstonlab;

namespace {

double time_of(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    // Lattice scan over a large carrier box.
    Rng rng(1);
    DualBall big2 = random_ball(rng, 2, 60, 6);
    DualBall big3 = random_ball(rng, 3, 12, 5);
    std::vector<VecZ> r1, r2;
    double s2 = time_of([&] { r1 = xi_enumerate_serial(big2); });
    double p2 = time_of([&] { r2 = xi_enumerate(big2); });
    if (r1 != r2) { std::printf("xi scan (dim 2): MISMATCH\n"); return 1; }
    row("xi scan (dim 2, box 60)", s2, p2);
    double s3 = time_of([&] { r1 = xi_enumerate_serial(big3); });
    double p3 = time_of([&] { r2 = xi_enumerate(big3); });
    if (r1 != r2) { std::printf("xi scan (dim 3): MISMATCH\n"); return 1; }
    row("xi scan (dim 3, box 12)", s3, p3);

    // Partition search on a balanced all-ones support (worst case: every
    // pairing is a candidate block).
    std::map<VecZ, Int> terms;
    Rng prng(2);
    while (terms.size() < 12) {
        VecZ e = {prng.range(-8, 8), prng.range(-8, 8)};
        terms[e] = terms.size() % 2 == 0 ? 1 : -1;
    }
    LaurentPoly hard(2, terms);
    NicenessVerdict v1, v2;
    double sn = time_of([&] { v1 = is_nice_serial(hard); });
    double pn = time_of([&] { v2 = is_nice(hard); });
    if (v1.status != v2.status) { std::printf("niceness: MISMATCH\n"); return 1; }
    row("niceness partition search", sn, pn);

    // Fuzz trial throughput.
    FuzzReport fr1, fr2;
    double sf = time_of([&] { fr1 = run_observation_fuzz(300, 9, false); });
    double pf = time_of([&] { fr2 = run_observation_fuzz(300, 9, true); });
    if (fr1.failures != fr2.failures) { std::printf("fuzz: MISMATCH\n"); return 1; }
    row("observation fuzz (300)", sf, pf);

    double sc = time_of([&] { fr1 = run_claim_fuzz(200, 11, false); });
    double pc = time_of([&] { fr2 = run_claim_fuzz(200, 11, true); });
    if (fr1.failures != fr2.failures) { std::printf("claim fuzz: MISMATCH\n"); return 1; }
    row("claim fuzz (200)", sc, pc);
    return 0;
}
