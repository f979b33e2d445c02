#pragma once

#include <optional>
#include <vector>

#include "thurstonlab/numeric.hpp"

namespace thurstonlab {

// Closed segment; endpoints may coincide (a degenerate segment is a point).
struct Segment {
    VecQ a, b;

    bool operator==(const Segment&) const = default;
};

bool point_on_segment(const VecQ& x, const Segment& s);

enum class location { outside, vertex, on_edge, face_interior };

struct LocateResult {
    location where;
    // Dimension of the minimal face containing the point; >= 2 exactly when
    // where == face_interior, 1 for on_edge, 0 for vertex, -1 outside.
    int face_dim;

    bool on_closed_edge() const {
        return where == location::vertex || where == location::on_edge;
    }
};

// Exact rational convex polytope, stored by its canonical vertex set
// (lexicographically sorted, every point extreme). Lower-dimensional
// polytopes (points, segments) are first-class.
class Polytope {
public:
    static Polytope hull(const std::vector<VecQ>& points);
    static Polytope hull_integral(const std::vector<VecZ>& points);

    int ambient_dim() const { return dim_; }
    const std::vector<VecQ>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }

    // Dimension of the polytope itself (affine rank of the vertex set).
    int dim() const;

    bool operator==(const Polytope&) const = default;

private:
    Polytope(int dim, std::vector<VecQ> verts) : dim_(dim), verts_(std::move(verts)) {}
    int dim_;
    std::vector<VecQ> verts_;
};

LocateResult locate(const Polytope& p, const VecQ& x);

Rat support_value(const Polytope& p, const VecQ& sigma);
std::vector<VecQ> maximizing_vertices(const Polytope& p, const VecQ& sigma);
std::vector<int> maximizing_vertex_indices(const Polytope& p, const VecQ& sigma);

// All 1-dimensional faces. A point has none; a segment is its own unique
// edge. Deterministic order (sorted endpoint pairs).
std::vector<Segment> edges(const Polytope& p);

// Vertex-index sets of all faces (every dimension, the polytope itself
// included). Each set is sorted; the list is sorted.
std::vector<std::vector<int>> face_lattice(const Polytope& p);

struct ObservationResult {
    bool hypothesis;
    std::optional<Segment> edge_parallel;
    std::optional<VecQ> vertex_witness;
};

// Checks, by exhaustive bounded search, whether every vertex v admits a
// nonzero integer l with v + l*w inside the polytope; when it does, produces
// an edge parallel to w and a vertex whose w-translate lands on that edge,
// via the opposite-sign adjacent-vertex construction.
ObservationResult observation_check(const Polytope& p, const VecQ& w);

int affine_rank(const std::vector<VecQ>& points);

} // namespace thurstonlab
