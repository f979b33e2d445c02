#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thurstonlab/bundle.hpp"
#include "thurstonlab/exceptional.hpp"
#include "thurstonlab/niceness.hpp"

namespace thurstonlab {

// Averaging over orbits of translation by 2e: each orbit of the support is
// collapsed to its lexicographically least member carrying the orbit sum;
// zero sums drop out. Rejects e = 0 (the product rule applies there).
SWSupport baldridge_average(const SWSupport& sw, const VecZ& e);

// Identity on supports for e = 0, averaging otherwise.
SWSupport sw_pushforward(const SWSupport& sw, const VecZ& e);

std::vector<VecZ> basic_classes_m(const SWSupport& sw, const VecZ& e);

// max over basic classes of |alpha.alpha| + sigma(kappa), floored at zero;
// zero for the empty set.
Int adjunction_bound(const std::vector<VecZ>& basics, const Bundle4& b, const ClassH2M& a);

enum class bound_status { exact, lower_bound, gabai_lower_bound, unsupported };

const char* to_string(bound_status s);
const char* provenance(bound_status s);

struct BoundResult {
    Int value;
    bound_status status;
};

// |alpha.alpha| + norm(sigma) with an honestly reported status: exact only
// with an established niceness verdict and a non-exceptional Euler class.
BoundResult refined_bound(const Bundle4& b, const ClassH2M& a, const NicenessVerdict& nice);

struct ClaimReport {
    std::optional<VecZ> witness;
    std::vector<std::string> hypothesis_violations;
    std::vector<VecZ> norm_attaining; // the searched set
};

// Searches the norm-attaining support classes for one whose 2e-orbit sum is
// nonzero. Hypothesis violations are reported, not fatal.
ClaimReport claim_witness(const Manifold3& m, const VecZ& e, const Covector& sigma);

long long smoothed_complexity(long long chi_sigma, long long intersection_count);

struct SymplecticVerdict {
    bool symplectic_candidate;
    std::vector<std::string> reasons;
};

SymplecticVerdict symplectic_status(const Bundle4& b, const ClassH2M& a);

} // namespace thurstonlab
