#include "thurstonlab/bundle.hpp"

namespace thurstonlab {

SWSupport SWSupport::make(int rank, std::map<VecZ, Int> entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (static_cast<int>(it->first.size()) != rank)
            throw precondition_error(errc::dimension_mismatch, "sw class length != b1");
        if (it->second == 0)
            it = entries.erase(it);
        else
            ++it;
    }
    return SWSupport{rank, std::move(entries)};
}

BettiPair betti_numbers(const Bundle4& b) {
    if (b.torsion_flag || is_zero(b.euler))
        throw precondition_error(errc::torsion_euler,
                                 "betti formula requires a nontorsion euler class");
    return {2LL * b.base.b1 - 2, static_cast<long long>(b.base.b1) - 1};
}

MatZ kernel_e(const Bundle4& b) {
    if (static_cast<int>(b.euler.size()) != b.base.b1)
        throw precondition_error(errc::dimension_mismatch, "euler length != b1");
    return integer_kernel({b.euler}, b.base.b1);
}

Int self_intersection(const Bundle4& b, const ClassH2M& a) {
    if (a.sigma.size() != b.euler.size() || a.curve.size() != a.sigma.size())
        throw precondition_error(errc::dimension_mismatch, "self_intersection");
    if (dot(a.sigma.entries, b.euler) != 0)
        throw precondition_error(errc::gysin_violation, "sigma pairs nontrivially with the euler class");
    return Int(2) * dot(a.sigma.entries, a.curve);
}

VecZ apply_matrix(const MatZ& m, const VecZ& v) {
    VecZ out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size())
            throw precondition_error(errc::dimension_mismatch, "matrix/vector shapes");
        out[i] = dot(m[i], v);
    }
    return out;
}

VecZ euler_of_cover(const CoverDatum& cd, const VecZ& e) {
    VecZ up = apply_matrix(cd.pullback, e);
    VecZ out(up.size());
    for (std::size_t i = 0; i < up.size(); ++i) {
        if (up[i] % cd.q != 0)
            throw precondition_error(errc::not_divisible,
                                     "pullback of euler class is not divisible by q");
        out[i] = up[i] / cd.q;
    }
    return out;
}

CoverReport validate_cover(const Manifold3& base, const CoverDatum& cd,
                           const std::vector<VecZ>& classes) {
    CoverReport rep;
    rep.deg_m = cd.q * cd.deg_n;

    // pushforward o pullback = deg * id on H^2(base).
    const int nb = base.b1;
    rep.composition_ok = static_cast<int>(cd.pushforward.size()) == nb;
    if (rep.composition_ok) {
        for (int j = 0; j < nb && rep.composition_ok; ++j) {
            VecZ ej(nb, 0);
            ej[j] = 1;
            VecZ col;
            try {
                col = apply_matrix(cd.pushforward, apply_matrix(cd.pullback, ej));
            } catch (const precondition_error&) {
                rep.composition_ok = false;
                break;
            }
            for (int i = 0; i < nb; ++i)
                if (col[i] != (i == j ? cd.deg_n : 0)) rep.composition_ok = false;
        }
    }

    std::vector<VecZ> sample = classes;
    if (sample.empty()) {
        for (int i = 0; i < nb; ++i) {
            VecZ ei(nb, 0);
            ei[i] = 1;
            sample.push_back(ei);
        }
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j) {
                VecZ s(nb, 0), d(nb, 0);
                s[i] = 1; s[j] = 1;
                d[i] = 1; d[j] = -1;
                sample.push_back(s);
                sample.push_back(d);
            }
    }

    rep.all_ok = rep.composition_ok;
    for (const auto& sigma : sample) {
        CoverNormCheck chk;
        chk.sigma = sigma;
        chk.base_norm = thurston_norm(base.dual_ball, Covector{sigma});
        chk.cover_norm = thurston_norm(cd.cover_base.dual_ball,
                                       Covector{apply_matrix(cd.pullback, sigma)});
        chk.ok = chk.cover_norm == Int(cd.deg_n) * chk.base_norm;
        rep.all_ok = rep.all_ok && chk.ok;
        rep.norm_checks.push_back(std::move(chk));
    }
    return rep;
}

bool fibered_cone_test(const Manifold3& m, const Covector& sigma) {
    if (!m.fibered_marks)
        throw precondition_error(errc::no_fibered_marks,
                                 "manifold carries no fibered-face annotations");
    return fibered_cone_test(m.dual_ball, *m.fibered_marks, sigma);
}

} // namespace thurstonlab
