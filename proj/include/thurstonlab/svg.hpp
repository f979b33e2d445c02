#pragma once

#include <string>

#include "thurstonlab/exceptional.hpp"

namespace thurstonlab {

// Deterministic SVG picture of a 2-dimensional dual ball: the ball outline,
// the exceptional carriers, and the integral exceptional classes. Only
// defined for dimension 2.
std::string ball_svg(const DualBall& b);

} // namespace thurstonlab
