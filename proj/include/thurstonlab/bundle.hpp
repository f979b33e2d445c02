#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thurstonlab/laurent.hpp"
#include "thurstonlab/norms.hpp"

namespace thurstonlab {

// Finitely supported Seiberg-Witten data: c1-classes in H^2-free-part
// coordinates mapped to nonzero integer invariants.
struct SWSupport {
    int rank;
    std::map<VecZ, Int> entries;

    static SWSupport make(int rank, std::map<VecZ, Int> entries);
};

// 3-manifold model: everything the pipelines consume, nothing geometric.
struct Manifold3 {
    std::string name;
    int b1;
    std::optional<LaurentPoly> delta;
    DualBall dual_ball;
    std::optional<SWSupport> sw;
    std::optional<std::vector<int>> fibered_marks; // indices into ball vertices
    std::string ball_source; // "input" or "alexander-convention"
};

// Circle bundle over the base; a torsion Euler class is modeled as the zero
// vector with the flag set.
struct Bundle4 {
    Manifold3 base;
    VecZ euler;
    bool torsion_flag = false;
};

// Second-homology class of the total space in Gysin coordinates: sigma is
// the projection to H_2 of the base, curve the H_1 part (well defined only
// modulo integer multiples of the Euler class).
struct ClassH2M {
    Covector sigma;
    VecZ curve;
};

struct CoverDatum {
    long long deg_n;
    long long q;
    MatZ pullback;    // H^2(base) -> H^2(cover)
    MatZ pushforward; // H^2(cover) -> H^2(base)
    Manifold3 cover_base;
};

struct BettiPair {
    long long b2;
    long long b2_plus;
};

// (2 b1 - 2, b1 - 1); only asserted for nontorsion Euler classes.
BettiPair betti_numbers(const Bundle4& b);

// Canonical basis of the saturated integer kernel of pairing with e.
MatZ kernel_e(const Bundle4& b);

// alpha . alpha = 2 sigma(curve); requires the Gysin constraint sigma(e)=0,
// which also makes the value independent of the curve representative.
Int self_intersection(const Bundle4& b, const ClassH2M& a);

VecZ apply_matrix(const MatZ& m, const VecZ& v);

// Euler class upstairs: pullback(e)/q, exact division.
VecZ euler_of_cover(const CoverDatum& cd, const VecZ& e);

struct CoverNormCheck {
    VecZ sigma;
    Int base_norm;
    Int cover_norm;
    bool ok;
};

struct CoverReport {
    bool composition_ok;
    long long deg_m;
    std::vector<CoverNormCheck> norm_checks;
    bool all_ok;
};

// Consistency checks: pushforward o pullback = deg * id, and transfer
// multiplicativity of the norm on the given classes (a small deterministic
// sample when none are supplied).
CoverReport validate_cover(const Manifold3& base, const CoverDatum& cd,
                           const std::vector<VecZ>& classes = {});

// Manifold-level wrapper; errors when the manifold carries no marks.
bool fibered_cone_test(const Manifold3& m, const Covector& sigma);

} // namespace thurstonlab
