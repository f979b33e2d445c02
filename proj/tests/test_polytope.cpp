#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "thurstonlab/fuzz.hpp"
#include "thurstonlab/polytope.hpp"
#include "thurstonlab/simplex.hpp"
#include "testers.hpp"

using namespace thurstonlab;

namespace {

Polytope square() { return Polytope::hull_integral({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}); }

VecQ qvec(std::initializer_list<int> xs) {
    VecQ v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("hull drops interior and collinear points") {
    Polytope p = Polytope::hull_integral({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
    CHECK(p.vertex_count() == 3);
    CHECK(std::find(p.vertices().begin(), p.vertices().end(), qvec({1, 0})) == p.vertices().end());

    Polytope single = Polytope::hull_integral({{3, 4}});
    CHECK(single.vertex_count() == 1);
    CHECK(single.dim() == 0);

    CHECK_THROWS_AS(Polytope::hull({}), precondition_error);
}

TEST_CASE("hull is idempotent and permutation invariant") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int dim = static_cast<int>(rng.range(2, 3));
        std::vector<VecZ> pts;
        int n = static_cast<int>(rng.range(1, 10));
        for (int i = 0; i < n; ++i) {
            VecZ p(dim);
            for (int k = 0; k < dim; ++k) p[k] = rng.range(-4, 4);
            pts.push_back(std::move(p));
        }
        Polytope p = Polytope::hull_integral(pts);
        CHECK(Polytope::hull(p.vertices()) == p);
        std::reverse(pts.begin(), pts.end());
        CHECK(Polytope::hull_integral(pts) == p);
    }
}

TEST_CASE("hull vertices are exactly the extreme points (oracle)") {
    Rng rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        int dim = static_cast<int>(rng.range(2, 3));
        std::vector<VecQ> pts;
        for (int i = 0; i < 18; ++i) {
            VecQ p(dim);
            for (int k = 0; k < dim; ++k) p[k] = rng.range(-4, 4);
            pts.push_back(std::move(p));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        Polytope p = Polytope::hull(pts);
        for (const auto& x : pts) {
            std::vector<VecQ> others;
            for (const auto& y : pts)
                if (y != x) others.push_back(y);
            bool extreme = others.empty() || !testers::caratheodory_in_hull(others, x);
            bool kept = std::find(p.vertices().begin(), p.vertices().end(), x) != p.vertices().end();
            CHECK(kept == extreme);
        }
    }
}

TEST_CASE("locate classifies square points") {
    Polytope p = square();
    CHECK(locate(p, qvec({1, 0})).where == location::on_edge);
    CHECK(locate(p, qvec({1, 1})).where == location::vertex);
    LocateResult inside = locate(p, qvec({0, 0}));
    CHECK(inside.where == location::face_interior);
    CHECK(inside.face_dim == 2);
    CHECK(locate(p, qvec({2, 0})).where == location::outside);
    CHECK_THROWS_AS(locate(p, qvec({1, 0, 0})), precondition_error);
}

TEST_CASE("locate outside iff a separating covector exists") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(rng.range(2, 3));
        std::vector<VecQ> pts;
        int n = static_cast<int>(rng.range(1, 6));
        for (int i = 0; i < n; ++i) {
            VecQ p(dim);
            for (int k = 0; k < dim; ++k) p[k] = rng.range(-3, 3);
            pts.push_back(std::move(p));
        }
        Polytope p = Polytope::hull(pts);
        VecQ x(dim);
        for (int k = 0; k < dim; ++k) x[k] = rng.range(-4, 4);

        bool outside = locate(p, x).where == location::outside;
        // Separation LP: f.(x - v) - s = 1 for every vertex, f free, s >= 0.
        // Feasible iff x is strictly separated from the hull.
        const auto& verts = p.vertices();
        int m = static_cast<int>(verts.size());
        std::vector<VecQ> a(m, VecQ(2 * dim + m, 0));
        VecQ rhs(m, 1), c(2 * dim + m, 0);
        for (int i = 0; i < m; ++i) {
            for (int k = 0; k < dim; ++k) {
                Rat d = x[k] - verts[i][k];
                a[i][k] = d;
                a[i][dim + k] = -d;
            }
            a[i][2 * dim + i] = -1;
        }
        bool separated = solve_lp(a, rhs, c).status == lp_status::optimal;
        CHECK(outside == separated);
    }
}

TEST_CASE("edges of standard polytopes") {
    CHECK(edges(square()).size() == 4);
    CHECK(edges(Polytope::hull_integral({{0, 0}, {2, 0}, {0, 1}})).size() == 3);
    Polytope oct = Polytope::hull_integral(
        {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    CHECK(edges(oct).size() == 12);
    CHECK(edges(Polytope::hull_integral({{5, 5}})).empty());
    // A segment is its own unique edge.
    auto seg_edges = edges(Polytope::hull_integral({{0}, {2}}));
    REQUIRE(seg_edges.size() == 1);
    CHECK(seg_edges[0].a == qvec({0}));
    CHECK(seg_edges[0].b == qvec({2}));
}

TEST_CASE("every edge midpoint lies on an edge") {
    Rng rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        int dim = static_cast<int>(rng.range(2, 3));
        std::vector<VecZ> pts;
        int n = static_cast<int>(rng.range(2, 8));
        for (int i = 0; i < n; ++i) {
            VecZ p(dim);
            for (int k = 0; k < dim; ++k) p[k] = rng.range(-3, 3);
            pts.push_back(std::move(p));
        }
        Polytope p = Polytope::hull_integral(pts);
        for (const auto& e : edges(p)) {
            CHECK(std::find(p.vertices().begin(), p.vertices().end(), e.a) != p.vertices().end());
            CHECK(std::find(p.vertices().begin(), p.vertices().end(), e.b) != p.vertices().end());
            VecQ mid(e.a.size());
            for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = (e.a[k] + e.b[k]) / 2;
            CHECK(locate(p, mid).where == location::on_edge);
        }
    }
}

TEST_CASE("support values and maximizers") {
    Polytope p = square();
    CHECK(support_value(p, qvec({2, 3})) == 5);
    CHECK(support_value(p, qvec({0, 0})) == 0);
    CHECK(support_value(Polytope::hull_integral({{-1}, {1}}), qvec({4})) == 4);

    auto m1 = maximizing_vertices(p, qvec({1, 0}));
    CHECK(m1 == std::vector<VecQ>{qvec({1, -1}), qvec({1, 1})});
    CHECK(maximizing_vertices(p, qvec({1, 1})) == std::vector<VecQ>{qvec({1, 1})});
    CHECK(maximizing_vertices(p, qvec({0, 0})).size() == 4);
}

TEST_CASE("support value is sublinear") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = static_cast<int>(rng.range(2, 3));
        std::vector<VecZ> pts;
        int n = static_cast<int>(rng.range(1, 7));
        for (int i = 0; i < n; ++i) {
            VecZ p(dim);
            for (int k = 0; k < dim; ++k) p[k] = rng.range(-3, 3);
            pts.push_back(std::move(p));
        }
        Polytope p = Polytope::hull_integral(pts);
        VecQ s(dim), t(dim), st(dim);
        for (int k = 0; k < dim; ++k) {
            s[k] = rng.range(-4, 4);
            t[k] = rng.range(-4, 4);
            st[k] = s[k] + t[k];
        }
        CHECK(support_value(p, st) <= support_value(p, s) + support_value(p, t));
        VecQ s3(dim);
        for (int k = 0; k < dim; ++k) s3[k] = 3 * s[k];
        CHECK(support_value(p, s3) == 3 * support_value(p, s));
    }
}

TEST_CASE("face lattice of the square") {
    auto faces = face_lattice(square());
    // 4 vertices + 4 edges + the square itself.
    CHECK(faces.size() == 9);
}

TEST_CASE("observation on the square") {
    Polytope p = square();
    ObservationResult r = observation_check(p, qvec({0, 1}));
    REQUIRE(r.hypothesis);
    REQUIRE(r.edge_parallel.has_value());
    REQUIRE(r.vertex_witness.has_value());
    // The found edge is vertical and the witness translates onto it.
    CHECK(r.edge_parallel->a[0] == r.edge_parallel->b[0]);
    VecQ moved = *r.vertex_witness;
    moved[1] += 1;
    CHECK(locate(p, moved).on_closed_edge());
    // The configuration of the positive-sign vertex (1,-1) also verifies.
    CHECK(locate(p, qvec({1, 0})).on_closed_edge());

    CHECK_FALSE(observation_check(p, qvec({1, 1})).hypothesis);
    CHECK_THROWS_AS(observation_check(p, qvec({0, 0})), precondition_error);
}

TEST_CASE("observation on a segment") {
    Polytope seg = Polytope::hull_integral({{0}, {2}});
    ObservationResult r = observation_check(seg, qvec({1}));
    REQUIRE(r.hypothesis);
    REQUIRE(r.edge_parallel.has_value());
    CHECK(r.edge_parallel->a == qvec({0}));
    CHECK(r.edge_parallel->b == qvec({2}));
}

TEST_CASE("observation on a point never holds") {
    Polytope pt = Polytope::hull_integral({{1, 2}});
    CHECK_FALSE(observation_check(pt, qvec({0, 1})).hypothesis);
}

TEST_CASE("point on segment") {
    Segment s{qvec({0, 0}), qvec({2, 2})};
    CHECK(point_on_segment(qvec({1, 1}), s));
    CHECK(point_on_segment(qvec({0, 0}), s));
    CHECK_FALSE(point_on_segment(qvec({3, 3}), s));
    CHECK_FALSE(point_on_segment(qvec({1, 0}), s));
    Segment degenerate{qvec({1, 1}), qvec({1, 1})};
    CHECK(point_on_segment(qvec({1, 1}), degenerate));
    CHECK_FALSE(point_on_segment(qvec({0, 1}), degenerate));
}
