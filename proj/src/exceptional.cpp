#include "thurstonlab/exceptional.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thurstonlab {

ExceptionalSet exceptional_segments(const DualBall& b) {
    ExceptionalSet out;
    auto es = edges(b.ball());
    for (const auto& v : b.ball().vertices()) {
        for (const auto& e : es) {
            Carrier c;
            c.vertex = v;
            c.edge = e;
            c.seg.a.resize(v.size());
            c.seg.b.resize(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                c.seg.a[i] = (e.a[i] - v[i]) / 2;
                c.seg.b[i] = (e.b[i] - v[i]) / 2;
            }
            out.carriers.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

struct ScanBox {
    VecZ lo, hi;
    long long count;
};

// Exact integer bounding box of the carriers.
ScanBox carrier_box(const ExceptionalSet& ex, int dim) {
    ScanBox box;
    box.lo.assign(dim, 0);
    box.hi.assign(dim, 0);
    box.count = ex.carriers.empty() ? 0 : 1;
    if (ex.carriers.empty()) return box;
    VecQ lo = ex.carriers[0].seg.a, hi = lo;
    for (const auto& c : ex.carriers) {
        for (const VecQ* p : {&c.seg.a, &c.seg.b}) {
            for (int i = 0; i < dim; ++i) {
                if ((*p)[i] < lo[i]) lo[i] = (*p)[i];
                if ((*p)[i] > hi[i]) hi[i] = (*p)[i];
            }
        }
    }
    for (int i = 0; i < dim; ++i) {
        // ceil(lo), floor(hi)
        Int nl = numerator(lo[i]), dl = denominator(lo[i]);
        Int ql = nl / dl;
        if (ql * dl < nl) ql += 1;
        Int nh = numerator(hi[i]), dh = denominator(hi[i]);
        Int qh = nh / dh;
        if (qh * dh > nh) qh -= 1;
        box.lo[i] = static_cast<long long>(ql);
        box.hi[i] = static_cast<long long>(qh);
        if (box.hi[i] < box.lo[i]) { box.count = 0; break; }
        box.count *= box.hi[i] - box.lo[i] + 1;
    }
    return box;
}

VecZ unflatten(const ScanBox& box, long long idx, int dim) {
    VecZ p(dim);
    for (int i = dim - 1; i >= 0; --i) {
        long long w = box.hi[i] - box.lo[i] + 1;
        p[i] = box.lo[i] + idx % w;
        idx /= w;
    }
    return p;
}

bool on_some_carrier(const ExceptionalSet& ex, const VecZ& w) {
    VecQ wq = to_rational(w);
    for (const auto& c : ex.carriers)
        if (point_on_segment(wq, c.seg)) return true;
    return false;
}

} // namespace

std::vector<VecZ> xi_enumerate_serial(const DualBall& b) {
    ExceptionalSet ex = exceptional_segments(b);
    ScanBox box = carrier_box(ex, b.dim());
    std::vector<VecZ> hits;
    for (long long idx = 0; idx < box.count; ++idx) {
        VecZ w = unflatten(box, idx, b.dim());
        if (is_zero(w)) continue;
        if (on_some_carrier(ex, w)) hits.push_back(std::move(w));
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<VecZ> xi_enumerate(const DualBall& b) {
    ExceptionalSet ex = exceptional_segments(b);
    ScanBox box = carrier_box(ex, b.dim());
    std::vector<VecZ> hits;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<VecZ> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long idx = 0; idx < box.count; ++idx) {
            VecZ w = unflatten(box, idx, b.dim());
            if (is_zero(w)) continue;
            if (on_some_carrier(ex, w)) local.push_back(std::move(w));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
#else
    for (long long idx = 0; idx < box.count; ++idx) {
        VecZ w = unflatten(box, idx, b.dim());
        if (is_zero(w)) continue;
        if (on_some_carrier(ex, w)) hits.push_back(std::move(w));
    }
#endif
    std::sort(hits.begin(), hits.end());
    return hits;
}

bool xi_test(const DualBall& b, const VecZ& e) {
    if (static_cast<int>(e.size()) != b.dim())
        throw precondition_error(errc::dimension_mismatch, "xi_test");
    if (is_zero(e)) return false;
    auto es = edges(b.ball());
    if (es.empty()) return false;
    for (const auto& v : b.ball().vertices()) {
        VecQ moved(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) moved[i] = v[i] + 2 * Rat(e[i]);
        for (const auto& edge : es)
            if (point_on_segment(moved, edge)) return true;
    }
    return false;
}

namespace {

// Does the open ray { t e : t > 0 } meet the segment?
bool ray_hits_segment(const VecZ& e, const Segment& s) {
    const int d = static_cast<int>(e.size());
    VecQ dir(d), a = s.a;
    for (int i = 0; i < d; ++i) dir[i] = s.b[i] - s.a[i];

    // Degenerate segment: solve t e = a directly.
    bool seg_point = std::all_of(dir.begin(), dir.end(), [](const Rat& x) { return x == 0; });
    auto positive_multiple_of_e = [&](const VecQ& x) {
        Rat t;
        bool have = false;
        for (int i = 0; i < d; ++i) {
            if (e[i] == 0) {
                if (x[i] != 0) return false;
            } else if (!have) {
                t = x[i] / e[i];
                have = true;
            } else if (x[i] != t * e[i]) {
                return false;
            }
        }
        return have && t > 0;
    };
    if (seg_point) return positive_multiple_of_e(a);

    // Generic case: t e = a + u dir. Pick two coordinates that make the
    // 2x2 system nonsingular; fall back to the parallel case otherwise.
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Rat det = Rat(e[i]) * (-dir[j]) - Rat(e[j]) * (-dir[i]);
            if (det == 0) continue;
            Rat t = (a[i] * (-dir[j]) - a[j] * (-dir[i])) / det;
            Rat u = (Rat(e[i]) * a[j] - Rat(e[j]) * a[i]) / det;
            if (t <= 0 || u < 0 || u > 1) return false;
            for (int k = 0; k < d; ++k)
                if (t * e[k] != a[k] + u * dir[k]) return false;
            return true;
        }
    }

    // dir is parallel to e. The segment can only meet the ray if it lies on
    // the line through e.
    Rat mu;
    bool have = false;
    for (int i = 0; i < d; ++i) {
        if (e[i] == 0) {
            if (a[i] != 0) return false;
        } else if (!have) {
            mu = a[i] / e[i];
            have = true;
        } else if (a[i] != mu * e[i]) {
            return false;
        }
    }
    if (!have) return false;
    // a = mu e and dir = nu e; the ray parameter along the segment is
    // mu + u nu for u in [0, 1].
    Rat nu;
    for (int i = 0; i < d; ++i)
        if (e[i] != 0) { nu = dir[i] / e[i]; break; }
    return mu > 0 || mu + nu > 0;
}

} // namespace

bool theta_test(const DualBall& b, const VecZ& e) {
    if (static_cast<int>(e.size()) != b.dim())
        throw precondition_error(errc::dimension_mismatch, "theta_test");
    if (is_zero(e)) return false;
    for (const auto& c : exceptional_segments(b).carriers)
        if (ray_hits_segment(e, c.seg)) return true;
    return false;
}

} // namespace thurstonlab
