#include "thurstonlab/numeric.hpp"

#include <algorithm>
#include <cstdlib>

namespace thurstonlab {

const char* to_string(errc c) {
    switch (c) {
        case errc::dimension_mismatch: return "DIMENSION_MISMATCH";
        case errc::zero_polynomial: return "ZERO_POLYNOMIAL";
        case errc::empty_input: return "EMPTY_INPUT";
        case errc::zero_vector: return "ZERO_VECTOR";
        case errc::asymmetric: return "ASYMMETRIC";
        case errc::non_integral_vertex: return "NON_INTEGRAL_VERTEX";
        case errc::zero_norm_face: return "ZERO_NORM_FACE";
        case errc::no_fibered_marks: return "NO_FIBERED_MARKS";
        case errc::torsion_euler: return "TORSION_EULER";
        case errc::not_divisible: return "NOT_DIVISIBLE";
        case errc::gysin_violation: return "GYSIN_VIOLATION";
        case errc::zero_euler_class: return "ZERO_EULER_CLASS";
        case errc::exponent_overflow: return "EXPONENT_OVERFLOW";
        case errc::bad_schema: return "BAD_SCHEMA";
    }
    return "UNKNOWN";
}

std::int64_t dot(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size())
        throw precondition_error(errc::dimension_mismatch, "dot: length mismatch");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = checked_add(acc, checked_mul(a[i], b[i]));
    return acc;
}

bool is_zero(const VecZ& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

VecZ negate(const VecZ& v) {
    VecZ r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i], -1);
    return r;
}

VecQ to_rational(const VecZ& v) {
    VecQ r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(x);
    return r;
}

VecZ to_integral(const VecQ& v) {
    VecZ r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (denominator(x) != 1)
            throw precondition_error(errc::non_integral_vertex, "non-integral coordinate " + rat_to_string(x));
        Int n = numerator(x);
        if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
            throw precondition_error(errc::exponent_overflow, "coordinate out of machine range");
        r.push_back(static_cast<std::int64_t>(n));
    }
    return r;
}

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in rational: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw input_error("malformed rational: " + s);
    }
}

namespace {

using BigVec = std::vector<Int>;
using BigMat = std::vector<BigVec>;

BigMat to_big(const MatZ& m, int ncols) {
    BigMat r(m.size(), BigVec(ncols, 0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(m[i].size()) != ncols)
            throw precondition_error(errc::dimension_mismatch, "ragged matrix");
        for (int j = 0; j < ncols; ++j) r[i][j] = m[i][j];
    }
    return r;
}

MatZ from_big(const BigMat& m) {
    MatZ r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            const Int& x = m[i][j];
            if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
                throw precondition_error(errc::exponent_overflow, "kernel entry out of machine range");
            r[i][j] = static_cast<std::int64_t>(x);
        }
    }
    return r;
}

// Row HNF in place: pivots positive, entries above a pivot reduced into
// [0, pivot); zero rows removed; rows ordered by pivot column.
void hnf_rows(BigMat& rows, int ncols) {
    std::size_t pivot_row = 0;
    for (int col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        // Clear the column below pivot_row with gcd steps.
        for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
            while (rows[i][col] != 0) {
                if (rows[pivot_row][col] == 0) {
                    std::swap(rows[pivot_row], rows[i]);
                    continue;
                }
                Int q = rows[i][col] / rows[pivot_row][col];
                for (int j = 0; j < ncols; ++j) rows[i][j] -= q * rows[pivot_row][j];
                if (rows[i][col] != 0) std::swap(rows[pivot_row], rows[i]);
            }
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (int j = 0; j < ncols; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
        // Reduce entries above the pivot.
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = rows[i][col] / rows[pivot_row][col];
            if (rows[i][col] - q * rows[pivot_row][col] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < ncols; ++j) rows[i][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
}

} // namespace

MatZ hermite_normal_form(const MatZ& rows, int ncols) {
    BigMat m = to_big(rows, ncols);
    hnf_rows(m, ncols);
    return from_big(m);
}

MatZ integer_kernel(const MatZ& a, int ncols) {
    const int m = static_cast<int>(a.size());
    // Column operations on [A over I]; columns whose A-part becomes zero
    // carry a lattice basis of the kernel in their I-part.
    BigMat work(m + ncols, BigVec(ncols, 0));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != ncols)
            throw precondition_error(errc::dimension_mismatch, "ragged matrix");
        for (int j = 0; j < ncols; ++j) work[i][j] = a[i][j];
    }
    for (int j = 0; j < ncols; ++j) work[m + j][j] = 1;

    int pivot_col = 0;
    for (int row = 0; row < m && pivot_col < ncols; ++row) {
        for (int j = pivot_col + 1; j < ncols; ++j) {
            while (work[row][j] != 0) {
                if (work[row][pivot_col] == 0) {
                    for (auto& r : work) std::swap(r[pivot_col], r[j]);
                    continue;
                }
                Int q = work[row][j] / work[row][pivot_col];
                for (auto& r : work) r[j] -= q * r[pivot_col];
                if (work[row][j] != 0)
                    for (auto& r : work) std::swap(r[pivot_col], r[j]);
            }
        }
        if (work[row][pivot_col] != 0) ++pivot_col;
    }

    BigMat kernel;
    for (int j = pivot_col; j < ncols; ++j) {
        bool zero_top = true;
        for (int i = 0; i < m; ++i)
            if (work[i][j] != 0) { zero_top = false; break; }
        if (!zero_top) continue;
        BigVec v(ncols);
        for (int k = 0; k < ncols; ++k) v[k] = work[m + k][j];
        kernel.push_back(std::move(v));
    }
    hnf_rows(kernel, ncols);
    return from_big(kernel);
}

int rank(const MatZ& rows, int ncols) {
    std::vector<VecQ> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != ncols)
            throw precondition_error(errc::dimension_mismatch, "ragged matrix");
        m.push_back(to_rational(r));
    }
    int rk = 0;
    for (int col = 0; col < ncols && rk < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int i = rk; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rk], m[piv]);
        for (int i = rk + 1; i < static_cast<int>(m.size()); ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rk][col];
            for (int j = col; j < ncols; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

Int gcd_of_maximal_minors(const MatZ& rows, int ncols) {
    const int k = static_cast<int>(rows.size());
    if (k == 0 || k > ncols) return 0;
    BigMat m = to_big(rows, ncols);
    std::vector<int> idx(k);
    Int g = 0;
    // Enumerate k-subsets of columns; desk-scale dimensions only.
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        // Bareiss determinant of the selected square submatrix.
        BigMat s(k, BigVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s[i][j] = m[i][cols[j]];
        Int det = 1;
        bool singular = false;
        Int prev = 1;
        for (int p = 0; p < k && !singular; ++p) {
            int piv = -1;
            for (int i = p; i < k; ++i)
                if (s[i][p] != 0) { piv = i; break; }
            if (piv < 0) { singular = true; break; }
            if (piv != p) { std::swap(s[piv], s[p]); det = -det; }
            for (int i = p + 1; i < k; ++i)
                for (int j = p + 1; j < k; ++j)
                    s[i][j] = (s[i][j] * s[p][p] - s[i][p] * s[p][j]) / prev;
            prev = s[p][p];
        }
        if (!singular) {
            det *= s[k - 1][k - 1];
            g = boost::multiprecision::gcd(g, det);
        }
        // Next combination.
        int i = k - 1;
        while (i >= 0 && cols[i] == ncols - k + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g < 0 ? Int(-g) : g;
}

} // namespace thurstonlab
