#include "thurstonlab/laurent.hpp"

namespace thurstonlab {

namespace {

void check_vars(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars() != q.nvars())
        throw precondition_error(errc::dimension_mismatch, "polynomial variable counts differ");
}

void check_vars(const LaurentPoly& p, const Covector& phi) {
    if (static_cast<std::size_t>(p.nvars()) != phi.size())
        throw precondition_error(errc::dimension_mismatch, "covector length != nvars");
}

} // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1)
        throw precondition_error(errc::dimension_mismatch, "nvars must be positive");
}

LaurentPoly::LaurentPoly(int nvars, std::map<VecZ, Int> terms) : LaurentPoly(nvars) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (static_cast<int>(it->first.size()) != nvars)
            throw precondition_error(errc::dimension_mismatch, "exponent length != nvars");
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    terms_ = std::move(terms);
}

LaurentPoly LaurentPoly::monomial(int nvars, const VecZ& exp, const Int& coeff) {
    std::map<VecZ, Int> t;
    if (coeff != 0) t[exp] = coeff;
    return LaurentPoly(nvars, std::move(t));
}

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
    return monomial(nvars, VecZ(nvars, 0), c);
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    check_vars(p, q);
    std::map<VecZ, Int> t = p.terms();
    for (const auto& [e, c] : q.terms()) {
        auto [it, fresh] = t.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    return LaurentPoly(p.nvars(), std::move(t));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    check_vars(p, q);
    std::map<VecZ, Int> t;
    for (const auto& [e1, c1] : p.terms()) {
        for (const auto& [e2, c2] : q.terms()) {
            VecZ e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(e1[i], e2[i]);
            auto [it, fresh] = t.try_emplace(e, Int(c1 * c2));
            if (!fresh) {
                it->second += c1 * c2;
                if (it->second == 0) t.erase(it);
            }
        }
    }
    return LaurentPoly(p.nvars(), std::move(t));
}

LaurentPoly specialize(const LaurentPoly& p, const Covector& phi) {
    check_vars(p, phi);
    std::map<VecZ, Int> t;
    for (const auto& [k, c] : level_sums(p, phi))
        if (c != 0) t[VecZ{k}] = c;
    return LaurentPoly(1, std::move(t));
}

std::map<std::int64_t, Int> level_sums(const LaurentPoly& p, const Covector& phi) {
    check_vars(p, phi);
    std::map<std::int64_t, Int> sums;
    for (const auto& [e, c] : p.terms()) sums[phi(e)] += c;
    return sums;
}

std::vector<VecZ> support_points(const LaurentPoly& p) {
    std::vector<VecZ> pts;
    pts.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) pts.push_back(e);
    return pts;
}

Polytope newton_polytope(const LaurentPoly& p) {
    if (p.is_zero())
        throw precondition_error(errc::zero_polynomial, "newton polytope of 0");
    return Polytope::hull_integral(support_points(p));
}

} // namespace thurstonlab
