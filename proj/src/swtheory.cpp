#include "thurstonlab/swtheory.hpp"

#include <algorithm>

namespace thurstonlab {

namespace {

// Is d an integer multiple of 2e? Returns the multiplier when it is.
std::optional<long long> orbit_step(const VecZ& d, const VecZ& e) {
    long long l = 0;
    bool have = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        long long step = checked_mul(2, e[i]);
        if (step == 0) {
            if (d[i] != 0) return std::nullopt;
        } else if (!have) {
            if (d[i] % step != 0) return std::nullopt;
            l = d[i] / step;
            have = true;
        } else if (d[i] != checked_mul(l, step)) {
            return std::nullopt;
        }
    }
    if (!have) return std::nullopt; // e = 0
    return l;
}

bool same_orbit(const VecZ& a, const VecZ& b, const VecZ& e) {
    VecZ d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = checked_add(a[i], -b[i]);
    if (is_zero(d)) return true;
    return orbit_step(d, e).has_value();
}

} // namespace

SWSupport baldridge_average(const SWSupport& sw, const VecZ& e) {
    if (static_cast<int>(e.size()) != sw.rank)
        throw precondition_error(errc::dimension_mismatch, "euler length != sw rank");
    if (is_zero(e))
        throw precondition_error(errc::zero_euler_class,
                                 "averaging needs e != 0; the product rule applies at e = 0");

    std::map<VecZ, Int> out;
    std::vector<VecZ> keys;
    for (const auto& [k, v] : sw.entries) keys.push_back(k);
    std::vector<bool> used(keys.size(), false);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (used[i]) continue;
        // keys are sorted, so keys[i] is the lexicographically least member
        // of its orbit among the support.
        Int sum = sw.entries.at(keys[i]);
        used[i] = true;
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            if (used[j]) continue;
            if (same_orbit(keys[j], keys[i], e)) {
                used[j] = true;
                sum += sw.entries.at(keys[j]);
            }
        }
        if (sum != 0) out[keys[i]] = sum;
    }
    return SWSupport{sw.rank, std::move(out)};
}

SWSupport sw_pushforward(const SWSupport& sw, const VecZ& e) {
    if (is_zero(e)) return sw;
    return baldridge_average(sw, e);
}

std::vector<VecZ> basic_classes_m(const SWSupport& sw, const VecZ& e) {
    std::vector<VecZ> out;
    for (const auto& [k, v] : baldridge_average(sw, e).entries) out.push_back(k);
    return out;
}

Int adjunction_bound(const std::vector<VecZ>& basics, const Bundle4& b, const ClassH2M& a) {
    Int self = self_intersection(b, a); // checks the Gysin constraint
    Int abs_self = self < 0 ? Int(-self) : self;
    Int best = 0;
    for (const auto& kappa : basics) {
        if (kappa.size() != a.sigma.size())
            throw precondition_error(errc::dimension_mismatch, "basic class length");
        Int cand = abs_self + dot(a.sigma.entries, kappa);
        if (cand > best) best = cand;
    }
    return best;
}

const char* to_string(bound_status s) {
    switch (s) {
        case bound_status::exact: return "EXACT";
        case bound_status::lower_bound: return "LOWER_BOUND";
        case bound_status::gabai_lower_bound: return "GABAI_LOWER_BOUND";
        case bound_status::unsupported: return "UNSUPPORTED";
    }
    return "UNKNOWN";
}

const char* provenance(bound_status s) {
    switch (s) {
        case bound_status::exact: return "Corollary 1.5";
        case bound_status::lower_bound: return "Theorem 1.1";
        case bound_status::gabai_lower_bound: return "Remark 2 / Gabai";
        case bound_status::unsupported: return "none";
    }
    return "none";
}

BoundResult refined_bound(const Bundle4& b, const ClassH2M& a, const NicenessVerdict& nice) {
    Int self = self_intersection(b, a);
    Int abs_self = self < 0 ? Int(-self) : self;
    Int value = abs_self + thurston_norm(b.base.dual_ball, a.sigma);

    bool exceptional = xi_test(b.base.dual_ball, b.euler);
    bound_status status;
    if (!exceptional)
        status = nice.status == nice_status::nice ? bound_status::exact
                                                  : bound_status::lower_bound;
    else
        status = self == 0 ? bound_status::gabai_lower_bound : bound_status::unsupported;
    return {value, status};
}

ClaimReport claim_witness(const Manifold3& m, const VecZ& e, const Covector& sigma) {
    ClaimReport rep;
    if (!m.sw)
        throw precondition_error(errc::empty_input, "manifold carries no sw support");
    const SWSupport& sw = *m.sw;
    if (static_cast<int>(sigma.size()) != m.b1 || static_cast<int>(e.size()) != m.b1)
        throw precondition_error(errc::dimension_mismatch, "claim_witness");

    Int norm = thurston_norm(m.dual_ball, sigma);

    // Model hypotheses, reported but not fatal.
    if (dot(sigma.entries, e) != 0)
        rep.hypothesis_violations.push_back("sigma pairs nontrivially with e");
    for (const auto& [h, value] : sw.entries) {
        (void)value;
        Int pairing = dot(sigma.entries, h);
        Int abs_pairing = pairing < 0 ? Int(-pairing) : pairing;
        if (abs_pairing > norm) {
            rep.hypothesis_violations.push_back(
                "support class exceeds the norm bound along sigma");
            break;
        }
    }
    for (const auto& v : maximizing_vertices(m.dual_ball.ball(), to_rational(sigma.entries))) {
        if (!sw.entries.count(to_integral(v))) {
            rep.hypothesis_violations.push_back(
                "norm-attaining vertex of the ball is not a support class");
            break;
        }
    }

    // Norm-attaining support classes, searched for a nonzero 2e-orbit sum.
    std::vector<VecZ> h_sigma;
    for (const auto& [h, v] : sw.entries)
        if (Int(dot(sigma.entries, h)) == norm) h_sigma.push_back(h);
    rep.norm_attaining = h_sigma;

    for (const auto& h : h_sigma) {
        // Orbit sum over the whole support; with sigma(e) = 0 the orbit of a
        // norm-attaining class stays norm-attaining.
        Int orbit_sum = 0;
        for (const auto& [other, value] : sw.entries)
            if (same_orbit(other, h, e)) orbit_sum += value;
        if (orbit_sum != 0) {
            rep.witness = h;
            break;
        }
    }
    return rep;
}

long long smoothed_complexity(long long chi_sigma, long long intersection_count) {
    if (chi_sigma < 0 || intersection_count < 0)
        throw precondition_error(errc::dimension_mismatch, "negative complexity input");
    return checked_add(chi_sigma, checked_mul(2, intersection_count));
}

SymplecticVerdict symplectic_status(const Bundle4& b, const ClassH2M& a) {
    SymplecticVerdict v;
    bool cone = fibered_cone_test(b.base, a.sigma);
    Int self = self_intersection(b, a);
    v.reasons.push_back(cone ? "sigma lies in a marked open fibered cone"
                             : "sigma does not lie in a marked open fibered cone");
    v.reasons.push_back(self > 0 ? "self-intersection is positive"
                                 : "self-intersection is not positive");
    v.symplectic_candidate = cone && self > 0;
    return v;
}

} // namespace thurstonlab
