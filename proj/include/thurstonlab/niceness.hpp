#pragma once

#include <optional>

#include "thurstonlab/laurent.hpp"

namespace thurstonlab {

enum class nice_status { nice, not_nice, sufficient_only_pass, undecided };

const char* to_string(nice_status s);

struct NicenessVerdict {
    nice_status status;
    // A nonzero covector annihilating the polynomial, present exactly when
    // status is not_nice.
    std::optional<Covector> witness;
};

// Sufficient criterion: every face of the Newton polytope (all dimensions,
// the polytope itself included) has nonzero coefficient sum over the
// support points it contains.
bool face_sum_criterion(const LaurentPoly& delta);

inline constexpr int kDefaultMaxSupport = 14;

// Exact decision by partition search when the support is small enough,
// otherwise the face-sum fallback (sufficient_only_pass / undecided).
NicenessVerdict is_nice(const LaurentPoly& delta, int max_support = kDefaultMaxSupport);
NicenessVerdict is_nice_serial(const LaurentPoly& delta, int max_support = kDefaultMaxSupport);

} // namespace thurstonlab
