#include "thurstonlab/svg.hpp"

#include <sstream>

namespace thurstonlab {

namespace {

// Carrier endpoints are half-integral, so a scale of 40 keeps every pixel
// coordinate an exact integer. The y axis is flipped for screen space.
constexpr long long kScale = 40;

long long px(const Rat& x) {
    Rat scaled = x * kScale;
    return static_cast<long long>(numerator(scaled) / denominator(scaled));
}

} // namespace

std::string ball_svg(const DualBall& b) {
    if (b.dim() != 2)
        throw precondition_error(errc::dimension_mismatch, "svg output needs dimension 2");

    std::int64_t radius = 1;
    for (const auto& v : b.integral_vertices())
        for (auto c : v) radius = std::max<std::int64_t>(radius, c < 0 ? -c : c);
    radius += 1;
    const std::int64_t half = radius * kScale;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << " " << -half
        << " " << 2 * half << " " << 2 * half << "\">\n";
    out << "  <line x1=\"" << -half << "\" y1=\"0\" x2=\"" << half
        << "\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"2\"/>\n";
    out << "  <line x1=\"0\" y1=\"" << -half << "\" x2=\"0\" y2=\"" << half
        << "\" stroke=\"#cccccc\" stroke-width=\"2\"/>\n";

    for (const auto& e : edges(b.ball()))
        out << "  <line x1=\"" << px(e.a[0]) << "\" y1=\"" << -px(e.a[1]) << "\" x2=\""
            << px(e.b[0]) << "\" y2=\"" << -px(e.b[1])
            << "\" stroke=\"#2255aa\" stroke-width=\"3\"/>\n";

    for (const auto& c : exceptional_segments(b).carriers)
        out << "  <line x1=\"" << px(c.seg.a[0]) << "\" y1=\"" << -px(c.seg.a[1]) << "\" x2=\""
            << px(c.seg.b[0]) << "\" y2=\"" << -px(c.seg.b[1])
            << "\" stroke=\"#cc3333\" stroke-width=\"2\" stroke-opacity=\"0.5\"/>\n";

    for (const auto& w : xi_enumerate(b))
        out << "  <circle cx=\"" << w[0] * kScale << "\" cy=\"" << -w[1] * kScale
            << "\" r=\"6\" fill=\"#111111\"/>\n";

    for (const auto& v : b.integral_vertices())
        out << "  <circle cx=\"" << v[0] * kScale << "\" cy=\"" << -v[1] * kScale
            << "\" r=\"5\" fill=\"#2255aa\"/>\n";

    out << "</svg>\n";
    return out.str();
}

} // namespace thurstonlab
