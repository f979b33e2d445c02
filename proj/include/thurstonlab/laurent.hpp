#pragma once

#include <map>
#include <vector>

#include "thurstonlab/numeric.hpp"
#include "thurstonlab/polytope.hpp"

namespace thurstonlab {

// Integer covector acting on exponent vectors by dot product.
struct Covector {
    VecZ entries;

    std::int64_t operator()(const VecZ& h) const { return dot(entries, h); }
    bool is_zero() const { return thurstonlab::is_zero(entries); }
    std::size_t size() const { return entries.size(); }

    bool operator==(const Covector&) const = default;
};

// Multivariable Laurent polynomial with exact integer coefficients. Terms
// are kept in lexicographic exponent order with no zero coefficients, so
// equal polynomials have equal representations.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars);
    LaurentPoly(int nvars, std::map<VecZ, Int> terms);

    static LaurentPoly monomial(int nvars, const VecZ& exp, const Int& coeff);
    static LaurentPoly constant(int nvars, const Int& c);

    int nvars() const { return nvars_; }
    const std::map<VecZ, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    bool operator==(const LaurentPoly&) const = default;

private:
    int nvars_;
    std::map<VecZ, Int> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// One-variable specialization sum_h a_h t^{phi(h)}.
LaurentPoly specialize(const LaurentPoly& p, const Covector& phi);

// Coefficient view of specialize: level k -> sum of a_h over phi(h) = k,
// zero sums kept for levels realized by the support.
std::map<std::int64_t, Int> level_sums(const LaurentPoly& p, const Covector& phi);

std::vector<VecZ> support_points(const LaurentPoly& p);

// Convex hull of the support; rejects the zero polynomial.
Polytope newton_polytope(const LaurentPoly& p);

} // namespace thurstonlab
