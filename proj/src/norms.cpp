#include "thurstonlab/norms.hpp"

#include <algorithm>

namespace thurstonlab {

DualBall DualBall::validate(const Polytope& p) {
    std::vector<VecQ> negated;
    negated.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) {
        to_integral(v); // throws non_integral_vertex
        VecQ n(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
        negated.push_back(std::move(n));
    }
    std::sort(negated.begin(), negated.end());
    if (negated != p.vertices())
        throw precondition_error(errc::asymmetric, "dual ball vertex set is not centrally symmetric");
    return DualBall(p);
}

DualBall DualBall::from_vertices(const std::vector<VecZ>& verts) {
    return validate(Polytope::hull_integral(verts));
}

DualBall DualBall::from_alexander(const LaurentPoly& delta) {
    if (delta.is_zero())
        throw precondition_error(errc::zero_polynomial, "alexander dual ball of 0");
    std::vector<VecZ> supp = support_points(delta);
    std::vector<VecZ> diffs;
    diffs.reserve(supp.size() * supp.size());
    for (const auto& g : supp)
        for (const auto& h : supp) {
            VecZ d(g.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = checked_add(g[i], -h[i]);
            diffs.push_back(std::move(d));
        }
    return validate(Polytope::hull_integral(diffs));
}

std::vector<VecZ> DualBall::integral_vertices() const {
    std::vector<VecZ> out;
    out.reserve(ball_.vertices().size());
    for (const auto& v : ball_.vertices()) out.push_back(to_integral(v));
    return out;
}

bool DualBall::is_origin_only() const {
    return ball_.vertex_count() == 1 &&
           std::all_of(ball_.vertices()[0].begin(), ball_.vertices()[0].end(),
                       [](const Rat& x) { return x == 0; });
}

Int thurston_norm(const DualBall& b, const Covector& sigma) {
    if (static_cast<std::size_t>(b.dim()) != sigma.size())
        throw precondition_error(errc::dimension_mismatch, "thurston_norm");
    Rat v = support_value(b.ball(), to_rational(sigma.entries));
    // Integral vertices and an integral covector give an integer; symmetry
    // of the ball makes it nonnegative.
    return numerator(v);
}

Polytope dual_face(const DualBall& b, const Covector& sigma) {
    if (sigma.is_zero() || thurston_norm(b, sigma) == 0)
        throw precondition_error(errc::zero_norm_face,
                                 "dual face undefined on zero-norm directions");
    return Polytope::hull(maximizing_vertices(b.ball(), to_rational(sigma.entries)));
}

bool fibered_cone_test(const DualBall& b, const std::vector<int>& marks, const Covector& sigma) {
    std::vector<int> maxima = maximizing_vertex_indices(b.ball(), to_rational(sigma.entries));
    if (maxima.size() != 1) return false;
    return std::find(marks.begin(), marks.end(), maxima[0]) != marks.end();
}

} // namespace thurstonlab
