#include "thurstonlab/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thurstonlab/simplex.hpp"

namespace thurstonlab {

bool point_on_segment(const VecQ& x, const Segment& s) {
    if (x.size() != s.a.size() || s.a.size() != s.b.size())
        throw precondition_error(errc::dimension_mismatch, "point_on_segment");
    if (s.a == s.b) return x == s.a;
    // x = a + t (b - a) with one coordinate pinning t.
    std::optional<Rat> t;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rat d = s.b[i] - s.a[i];
        if (d != 0) {
            t = (x[i] - s.a[i]) / d;
            break;
        }
    }
    if (*t < 0 || *t > 1) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != s.a[i] + *t * (s.b[i] - s.a[i])) return false;
    return true;
}

int affine_rank(const std::vector<VecQ>& points) {
    if (points.empty()) return -1;
    const int d = static_cast<int>(points[0].size());
    std::vector<VecQ> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        VecQ v(d);
        for (int j = 0; j < d; ++j) v[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(v));
    }
    // Rational Gaussian elimination.
    int rk = 0;
    for (int col = 0; col < d && rk < static_cast<int>(diffs.size()); ++col) {
        int piv = -1;
        for (int i = rk; i < static_cast<int>(diffs.size()); ++i)
            if (diffs[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(diffs[rk], diffs[piv]);
        for (int i = rk + 1; i < static_cast<int>(diffs.size()); ++i) {
            if (diffs[i][col] == 0) continue;
            Rat f = diffs[i][col] / diffs[rk][col];
            for (int j = col; j < d; ++j) diffs[i][j] -= f * diffs[rk][j];
        }
        ++rk;
    }
    return rk;
}

Polytope Polytope::hull(const std::vector<VecQ>& points) {
    if (points.empty())
        throw precondition_error(errc::empty_input, "hull of empty point set");
    const int d = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw precondition_error(errc::dimension_mismatch, "hull: mixed dimensions");

    std::vector<VecQ> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<VecQ> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<VecQ> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_hull(others, pts[i]))
            verts.push_back(pts[i]);
    }
    return Polytope(d, std::move(verts));
}

Polytope Polytope::hull_integral(const std::vector<VecZ>& points) {
    std::vector<VecQ> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(to_rational(p));
    return hull(pts);
}

int Polytope::dim() const { return affine_rank(verts_); }

LocateResult locate(const Polytope& p, const VecQ& x) {
    if (static_cast<int>(x.size()) != p.ambient_dim())
        throw precondition_error(errc::dimension_mismatch, "locate");
    std::vector<int> face = minimal_face_indices(p.vertices(), x);
    if (face.empty()) return {location::outside, -1};
    if (face.size() == 1) return {location::vertex, 0};
    std::vector<VecQ> pts;
    for (int i : face) pts.push_back(p.vertices()[i]);
    int fd = affine_rank(pts);
    if (fd == 1) return {location::on_edge, 1};
    return {location::face_interior, fd};
}

Rat support_value(const Polytope& p, const VecQ& sigma) {
    if (static_cast<int>(sigma.size()) != p.ambient_dim())
        throw precondition_error(errc::dimension_mismatch, "support_value");
    Rat best;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Rat s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * sigma[i];
        if (first || s > best) { best = s; first = false; }
    }
    return best;
}

std::vector<int> maximizing_vertex_indices(const Polytope& p, const VecQ& sigma) {
    Rat best = support_value(p, sigma);
    std::vector<int> idx;
    for (std::size_t k = 0; k < p.vertices().size(); ++k) {
        const auto& v = p.vertices()[k];
        Rat s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * sigma[i];
        if (s == best) idx.push_back(static_cast<int>(k));
    }
    return idx;
}

std::vector<VecQ> maximizing_vertices(const Polytope& p, const VecQ& sigma) {
    std::vector<VecQ> out;
    for (int i : maximizing_vertex_indices(p, sigma)) out.push_back(p.vertices()[i]);
    return out;
}

std::vector<Segment> edges(const Polytope& p) {
    const auto& v = p.vertices();
    const int n = static_cast<int>(v.size());
    std::vector<Segment> out;
    if (n < 2) return out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // [v_i, v_j] is a face iff no representation of the midpoint
            // puts weight on any other vertex.
            VecQ mid(v[i].size());
            for (std::size_t k = 0; k < mid.size(); ++k)
                mid[k] = (v[i][k] + v[j][k]) / 2;
            std::vector<int> others;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) others.push_back(k);
            if (others.empty() || max_weight_sum(v, mid, others) == 0)
                out.push_back(Segment{v[i], v[j]});
        }
    }
    return out;
}

std::vector<std::vector<int>> face_lattice(const Polytope& p) {
    const auto& v = p.vertices();
    const int n = static_cast<int>(v.size());
    std::set<std::vector<int>> faces;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    faces.insert(all);

    // Closure of a vertex set: the minimal face containing its barycenter.
    auto closure = [&](const std::vector<int>& gen) {
        VecQ bary(v[0].size(), 0);
        for (int i : gen)
            for (std::size_t k = 0; k < bary.size(); ++k) bary[k] += v[i][k];
        for (auto& c : bary) c /= static_cast<int>(gen.size());
        return minimal_face_indices(v, bary);
    };

    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        faces.insert({i});
        frontier.push_back({i});
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier) {
            for (int u = 0; u < n; ++u) {
                if (std::binary_search(f.begin(), f.end(), u)) continue;
                std::vector<int> gen = f;
                gen.push_back(u);
                std::sort(gen.begin(), gen.end());
                auto cl = closure(gen);
                if (faces.insert(cl).second) next.push_back(cl);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<std::vector<int>>(faces.begin(), faces.end());
}

namespace {

// Nonzero integers l with v + l*w inside the polytope; the candidate range
// is pinned by the bounding box of the vertices.
std::vector<long long> translate_range(const Polytope& p, const VecQ& v, const VecQ& w) {
    const int d = p.ambient_dim();
    bool unbounded = true;
    Rat lo, hi;
    bool have = false;
    for (int i = 0; i < d; ++i) {
        if (w[i] == 0) continue;
        unbounded = false;
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const auto& u : p.vertices()) {
            if (u[i] < mn) mn = u[i];
            if (u[i] > mx) mx = u[i];
        }
        Rat a = (mn - v[i]) / w[i];
        Rat b = (mx - v[i]) / w[i];
        if (a > b) std::swap(a, b);
        if (!have) { lo = a; hi = b; have = true; }
        else {
            if (a > lo) lo = a;
            if (b < hi) hi = b;
        }
    }
    std::vector<long long> ls;
    if (unbounded) return ls; // w == 0, rejected earlier
    // Integer points of [lo, hi], zero excluded.
    auto ceil_rat = [](const Rat& r) {
        Int n = numerator(r), d = denominator(r);
        Int q = n / d;
        if (q * d < n) q += 1;
        return q;
    };
    auto floor_rat = [](const Rat& r) {
        Int n = numerator(r), d = denominator(r);
        Int q = n / d;
        if (q * d > n) q -= 1;
        return q;
    };
    Int a = ceil_rat(lo), b = floor_rat(hi);
    for (Int l = a; l <= b; ++l)
        if (l != 0) ls.push_back(static_cast<long long>(l));
    return ls;
}

} // namespace

ObservationResult observation_check(const Polytope& p, const VecQ& w) {
    if (static_cast<int>(w.size()) != p.ambient_dim())
        throw precondition_error(errc::dimension_mismatch, "observation_check");
    if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; }))
        throw precondition_error(errc::zero_vector, "observation_check: w = 0");

    const auto& verts = p.vertices();
    const int n = static_cast<int>(verts.size());
    // sign[i]: +1 if some positive translate stays inside, -1 if negative,
    // 0 if none (a vertex cannot have both, by extremality).
    std::vector<int> sign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (long long l : translate_range(p, verts[i], w)) {
            VecQ moved(verts[i].size());
            for (std::size_t k = 0; k < moved.size(); ++k)
                moved[k] = verts[i][k] + Rat(l) * w[k];
            if (in_hull(verts, moved)) {
                sign[i] = l > 0 ? 1 : -1;
                break;
            }
        }
        if (sign[i] == 0) return {false, std::nullopt, std::nullopt};
    }

    // Opposite signs exist; find an edge joining them. The positive endpoint
    // translated by w lands on that edge.
    for (const auto& e : edges(p)) {
        auto idx = [&](const VecQ& x) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
        };
        int ia = idx(e.a), ib = idx(e.b);
        if (sign[ia] == sign[ib]) continue;
        const VecQ& vplus = sign[ia] > 0 ? e.a : e.b;
        return {true, e, vplus};
    }
    // Unreachable when the hypothesis holds: the edge graph is connected and
    // both signs occur.
    return {true, std::nullopt, std::nullopt};
}

} // namespace thurstonlab
