#pragma once

#include <vector>

#include "thurstonlab/laurent.hpp"
#include "thurstonlab/polytope.hpp"

namespace thurstonlab {

// Dual norm ball: centrally symmetric polytope with integral vertices in
// H^2-coordinates. The induced seminorm is the support function over its
// vertices.
class DualBall {
public:
    static DualBall validate(const Polytope& p);
    static DualBall from_vertices(const std::vector<VecZ>& verts);

    // Difference body of the Newton polytope, so the induced seminorm is
    // sigma -> max over support pairs of sigma(g - h).
    static DualBall from_alexander(const LaurentPoly& delta);

    const Polytope& ball() const { return ball_; }
    int dim() const { return ball_.ambient_dim(); }
    std::vector<VecZ> integral_vertices() const;
    bool is_origin_only() const;

    bool operator==(const DualBall&) const = default;

private:
    explicit DualBall(Polytope p) : ball_(std::move(p)) {}
    Polytope ball_;
};

Int thurston_norm(const DualBall& b, const Covector& sigma);

// Face of the ball dual to sigma: hull of the norm-attaining vertices.
// Undefined (error) on zero-norm directions.
Polytope dual_face(const DualBall& b, const Covector& sigma);

// True iff the unique norm-maximizing vertex of the ball is one of the
// marked vertices (indices into the canonical vertex list).
bool fibered_cone_test(const DualBall& b, const std::vector<int>& marks, const Covector& sigma);

} // namespace thurstonlab
