#pragma once

#include <vector>

#include "thurstonlab/numeric.hpp"

namespace thurstonlab {

// Dense exact-rational simplex for the small LPs behind the polytope
// predicates: maximize c.x subject to A x = b, x >= 0. Bland's rule, so it
// terminates on degenerate instances.
enum class lp_status { optimal, infeasible, unbounded };

struct LpResult {
    lp_status status;
    Rat value;
    std::vector<Rat> x;
};

LpResult solve_lp(const std::vector<VecQ>& a, const VecQ& b, const VecQ& c);

// Convex-combination helpers over a point set (points are columns of the
// constraint matrix together with a sum-to-one row).

bool in_hull(const std::vector<VecQ>& points, const VecQ& x);

// max of sum_{j in weight_set} lambda_j over representations of x; requires
// x in hull (asserted via feasibility), returns the optimum.
Rat max_weight_sum(const std::vector<VecQ>& points, const VecQ& x,
                   const std::vector<int>& weight_set);

// Indices of the points spanning the minimal face of conv(points) that
// contains x, i.e. every point receiving positive weight in some
// representation of x. Empty when x is outside the hull.
std::vector<int> minimal_face_indices(const std::vector<VecQ>& points, const VecQ& x);

} // namespace thurstonlab
