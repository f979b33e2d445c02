#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "thurstonlab/errors.hpp"

namespace thurstonlab {

// Coefficients and geometric data are exact: arbitrary-precision integers
// and rationals. Exponent and lattice vectors are machine integers with
// overflow-checked arithmetic.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecZ = std::vector<std::int64_t>;
using VecQ = std::vector<Rat>;
using MatZ = std::vector<VecZ>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw precondition_error(errc::exponent_overflow, "integer overflow in exponent arithmetic");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw precondition_error(errc::exponent_overflow, "integer overflow in exponent arithmetic");
    return r;
}

// Overflow-checked dot product of two equal-length machine-integer vectors.
std::int64_t dot(const VecZ& a, const VecZ& b);

bool is_zero(const VecZ& v);
VecZ negate(const VecZ& v);

VecQ to_rational(const VecZ& v);
// Fails with non_integral_vertex if any entry has a denominator.
VecZ to_integral(const VecQ& v);

// Canonical text form of a rational: "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Basis of the saturated integer kernel { x : A x = 0 }, rows in Hermite
// normal form so the result is canonical.
MatZ integer_kernel(const MatZ& a, int ncols);

// Row-style Hermite normal form of the lattice spanned by the rows.
MatZ hermite_normal_form(const MatZ& rows, int ncols);

// Rank over the rationals.
int rank(const MatZ& rows, int ncols);

// gcd of all k x k minors of a k x n matrix (k <= n); 0 for the empty matrix.
Int gcd_of_maximal_minors(const MatZ& rows, int ncols);

} // namespace thurstonlab
