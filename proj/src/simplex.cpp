#include "thurstonlab/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace thurstonlab {

namespace {

// Tableau with m rows over n structural + m artificial columns. basis[i] is
// the column currently basic in row i. obj is the reduced-cost row for a
// maximization problem (entry < 0 means the column can improve).
struct Tableau {
    int m, n;
    std::vector<VecQ> rows;   // m x (n + m)
    VecQ rhs;                 // m
    VecQ obj;                 // n + m
    Rat obj_rhs;
    std::vector<int> basis;
    std::vector<bool> barred; // columns never allowed to enter

    Tableau(const std::vector<VecQ>& a, const VecQ& b)
        : m(static_cast<int>(a.size())), n(m ? static_cast<int>(a[0].size()) : 0) {
        rows.assign(m, VecQ(n + m, 0));
        rhs = b;
        basis.resize(m);
        barred.assign(n + m, false);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) rows[i][j] = a[i][j];
            if (rhs[i] < 0) {
                for (int j = 0; j < n; ++j) rows[i][j] = -rows[i][j];
                rhs[i] = -rhs[i];
            }
            rows[i][n + i] = 1;
            basis[i] = n + i;
        }
        obj.assign(n + m, 0);
        obj_rhs = 0;
    }

    void pivot(int row, int col) {
        Rat p = rows[row][col];
        for (auto& v : rows[row]) v /= p;
        rhs[row] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (int j = 0; j < n + m; ++j) rows[i][j] -= f * rows[row][j];
            rhs[i] -= f * rhs[row];
        }
        if (obj[col] != 0) {
            Rat f = obj[col];
            for (int j = 0; j < n + m; ++j) obj[j] -= f * rows[row][j];
            obj_rhs -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Bland's rule; returns optimal or unbounded.
    lp_status run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n + m; ++j)
                if (!barred[j] && obj[j] < 0) { enter = j; break; }
            if (enter < 0) return lp_status::optimal;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rhs[i] / rows[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return lp_status::unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult solve_lp(const std::vector<VecQ>& a, const VecQ& b, const VecQ& c) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : static_cast<int>(c.size());
    Tableau t(a, b);

    // Phase 1: maximize -(sum of artificials).
    for (int i = 0; i < m; ++i) t.obj[t.n + i] = 1;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < t.n + t.m; ++j) t.obj[j] -= t.rows[i][j];
        t.obj_rhs -= t.rhs[i];
    }
    t.run();
    if (t.obj_rhs != 0) return {lp_status::infeasible, 0, {}};

    // Drive artificials out of the basis where possible; bar them all.
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) { col = j; break; }
        if (col >= 0) t.pivot(i, col);
    }
    for (int j = 0; j < m; ++j) t.barred[n + j] = true;

    // Phase 2.
    std::fill(t.obj.begin(), t.obj.end(), Rat(0));
    t.obj_rhs = 0;
    for (int j = 0; j < n; ++j) t.obj[j] = -c[j];
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] >= n || t.obj[t.basis[i]] == 0) continue;
        Rat f = t.obj[t.basis[i]];
        for (int j = 0; j < t.n + t.m; ++j) t.obj[j] -= f * t.rows[i][j];
        t.obj_rhs -= f * t.rhs[i];
    }
    lp_status st = t.run();
    if (st == lp_status::unbounded) return {lp_status::unbounded, 0, {}};

    LpResult res;
    res.status = lp_status::optimal;
    res.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

namespace {

// Equality system [coords; ones] lambda = [x; 1].
void combination_system(const std::vector<VecQ>& points, const VecQ& x,
                        std::vector<VecQ>& a, VecQ& b) {
    const int d = static_cast<int>(x.size());
    const int n = static_cast<int>(points.size());
    a.assign(d + 1, VecQ(n, 0));
    b.assign(d + 1, 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i) a[i][j] = points[j][i];
        a[d][j] = 1;
    }
    for (int i = 0; i < d; ++i) b[i] = x[i];
    b[d] = 1;
}

} // namespace

bool in_hull(const std::vector<VecQ>& points, const VecQ& x) {
    if (points.empty()) return false;
    std::vector<VecQ> a;
    VecQ b;
    combination_system(points, x, a, b);
    VecQ c(points.size(), 0);
    return solve_lp(a, b, c).status == lp_status::optimal;
}

Rat max_weight_sum(const std::vector<VecQ>& points, const VecQ& x,
                   const std::vector<int>& weight_set) {
    std::vector<VecQ> a;
    VecQ b;
    combination_system(points, x, a, b);
    VecQ c(points.size(), 0);
    for (int j : weight_set) c[j] = 1;
    LpResult r = solve_lp(a, b, c);
    assert(r.status == lp_status::optimal);
    return r.value;
}

std::vector<int> minimal_face_indices(const std::vector<VecQ>& points, const VecQ& x) {
    const int n = static_cast<int>(points.size());
    std::vector<VecQ> a;
    VecQ b;
    combination_system(points, x, a, b);

    VecQ c(n, 0);
    LpResult feas = solve_lp(a, b, c);
    if (feas.status != lp_status::optimal) return {};

    std::vector<bool> in_face(n, false);
    for (int j = 0; j < n; ++j)
        if (feas.x[j] > 0) in_face[j] = true;
    for (int j = 0; j < n; ++j) {
        if (in_face[j]) continue;
        c.assign(n, 0);
        c[j] = 1;
        LpResult r = solve_lp(a, b, c);
        if (r.value > 0)
            for (int k = 0; k < n; ++k)
                if (r.x[k] > 0) in_face[k] = true;
    }
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
        if (in_face[j]) idx.push_back(j);
    return idx;
}

} // namespace thurstonlab
