#pragma once

#include <vector>

#include "thurstonlab/norms.hpp"

namespace thurstonlab {

// One carrier per (vertex v, closed edge E) pair of the ball: the segment
// (E - v)/2. Their union minus the origin is the exceptional locus; its
// integral points form the finite exceptional set, and the classes on rays
// through it form the unbounded one.
struct Carrier {
    Segment seg;    // (E - v)/2
    VecQ vertex;    // v
    Segment edge;   // E
};

struct ExceptionalSet {
    std::vector<Carrier> carriers;
};

ExceptionalSet exceptional_segments(const DualBall& b);

// All nonzero integer vectors on some carrier: a bounding-box lattice scan
// with exact per-point carrier membership. The scan parallelizes over
// points; output is sorted, so it is order-independent.
std::vector<VecZ> xi_enumerate(const DualBall& b);
std::vector<VecZ> xi_enumerate_serial(const DualBall& b);

// Direct test: some vertex v has v + 2e on a closed edge of the ball.
bool xi_test(const DualBall& b, const VecZ& e);

// True iff the open ray through e meets some carrier away from the origin.
bool theta_test(const DualBall& b, const VecZ& e);

} // namespace thurstonlab
