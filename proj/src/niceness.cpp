#include "thurstonlab/niceness.hpp"

#include <algorithm>
#include <functional>

#include "thurstonlab/simplex.hpp"

namespace thurstonlab {

const char* to_string(nice_status s) {
    switch (s) {
        case nice_status::nice: return "NICE";
        case nice_status::not_nice: return "NOT_NICE";
        case nice_status::sufficient_only_pass: return "SUFFICIENT_ONLY_PASS";
        case nice_status::undecided: return "UNDECIDED";
    }
    return "UNKNOWN";
}

bool face_sum_criterion(const LaurentPoly& delta) {
    if (delta.is_zero())
        throw precondition_error(errc::zero_polynomial, "face_sum_criterion of 0");
    Polytope np = newton_polytope(delta);
    std::vector<VecZ> supp = support_points(delta);

    // Minimal face of each support point; the point lies in a face iff that
    // face contains its minimal one.
    std::vector<std::vector<int>> min_face(supp.size());
    for (std::size_t i = 0; i < supp.size(); ++i)
        min_face[i] = minimal_face_indices(np.vertices(), to_rational(supp[i]));

    for (const auto& face : face_lattice(np)) {
        Int sum = 0;
        for (std::size_t i = 0; i < supp.size(); ++i) {
            if (std::includes(face.begin(), face.end(), min_face[i].begin(), min_face[i].end()))
                sum += delta.terms().at(supp[i]);
        }
        if (sum == 0) return false;
    }
    return true;
}

namespace {

// Partition search: the polynomial has a vanishing specialization iff its
// support splits into zero-sum blocks whose within-block differences have a
// nonzero integer annihilator.
struct PartitionSearch {
    int nvars;
    std::vector<VecZ> pts;      // sorted support
    std::vector<Int> coeff;

    explicit PartitionSearch(const LaurentPoly& p) : nvars(p.nvars()) {
        for (const auto& [e, c] : p.terms()) {
            pts.push_back(e);
            coeff.push_back(c);
        }
    }

    // Enumerate blocks { anchor } + S with zero total coefficient, S drawn
    // from `pool` (sorted indices > assigned). Calls sink(S); returns true
    // if the sink asked to stop.
    bool enum_blocks(int anchor, const std::vector<int>& pool,
                     const std::function<bool(const std::vector<int>&)>& sink) const {
        std::vector<int> chosen;
        std::function<bool(std::size_t, Int)> dfs = [&](std::size_t pos, Int sum) {
            if (sum == 0 && !chosen.empty())
                if (sink(chosen)) return true;
            if (pos == pool.size()) return false;
            // The outstanding sum must be cancellable by what is left.
            Int rest = 0;
            for (std::size_t k = pos; k < pool.size(); ++k)
                rest += boost::multiprecision::abs(coeff[pool[k]]);
            if (boost::multiprecision::abs(sum) > rest) return false;
            chosen.push_back(pool[pos]);
            if (dfs(pos + 1, sum + coeff[pool[pos]])) return true;
            chosen.pop_back();
            return dfs(pos + 1, sum);
        };
        return dfs(0, coeff[anchor]);
    }

    // Complete the partition of `pool`, extending `rows` (within-block
    // differences so far). Returns the first witness found in DFS order.
    std::optional<VecZ> complete(std::vector<int> pool, MatZ rows) const {
        if (rank(rows, nvars) == nvars) return std::nullopt;
        if (pool.empty()) {
            MatZ kernel = integer_kernel(rows, nvars);
            if (kernel.empty()) return std::nullopt;
            return *std::min_element(kernel.begin(), kernel.end());
        }
        int anchor = pool.front();
        std::vector<int> rest(pool.begin() + 1, pool.end());
        std::optional<VecZ> found;
        enum_blocks(anchor, rest, [&](const std::vector<int>& s) {
            MatZ next_rows = rows;
            for (int i : s) {
                VecZ d(nvars);
                for (int k = 0; k < nvars; ++k) d[k] = checked_add(pts[i][k], -pts[anchor][k]);
                next_rows.push_back(std::move(d));
            }
            std::vector<int> next_pool;
            for (int i : rest)
                if (std::find(s.begin(), s.end(), i) == s.end()) next_pool.push_back(i);
            found = complete(std::move(next_pool), std::move(next_rows));
            return found.has_value();
        });
        return found;
    }
};

NicenessVerdict run_is_nice(const LaurentPoly& delta, int max_support, bool parallel) {
    if (delta.is_zero()) {
        // Every covector kills the zero polynomial.
        VecZ unit(delta.nvars(), 0);
        unit[0] = 1;
        return {nice_status::not_nice, Covector{unit}};
    }

    if (delta.nvars() == 1)
        return {nice_status::nice, std::nullopt};

    const int n = static_cast<int>(delta.support_size());
    if (n > max_support) {
        return {face_sum_criterion(delta) ? nice_status::sufficient_only_pass
                                          : nice_status::undecided,
                std::nullopt};
    }

    PartitionSearch search(delta);
    // Fan out over the possible blocks of the first support point; each
    // branch is explored independently and the lexicographically least
    // witness over all branches is reported, so the verdict does not depend
    // on scheduling.
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<std::vector<int>> first_blocks;
    if (n > 0) {
        std::vector<int> rest(all.begin() + 1, all.end());
        search.enum_blocks(0, rest, [&](const std::vector<int>& s) {
            first_blocks.push_back(s);
            return false;
        });
    }

    std::vector<std::optional<VecZ>> branch(first_blocks.size());
    auto run_branch = [&](int bi) {
        const auto& s = first_blocks[bi];
        MatZ rows;
        for (int i : s) {
            VecZ d(search.nvars);
            for (int k = 0; k < search.nvars; ++k)
                d[k] = checked_add(search.pts[i][k], -search.pts[0][k]);
            rows.push_back(std::move(d));
        }
        std::vector<int> pool;
        for (int i = 1; i < n; ++i)
            if (std::find(s.begin(), s.end(), i) == s.end()) pool.push_back(i);
        branch[bi] = search.complete(std::move(pool), std::move(rows));
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int bi = 0; bi < static_cast<int>(first_blocks.size()); ++bi) run_branch(bi);
    } else {
        for (int bi = 0; bi < static_cast<int>(first_blocks.size()); ++bi) run_branch(bi);
    }

    std::optional<VecZ> best;
    for (const auto& w : branch)
        if (w && (!best || *w < *best)) best = w;
    if (best) return {nice_status::not_nice, Covector{*best}};
    return {nice_status::nice, std::nullopt};
}

} // namespace

NicenessVerdict is_nice(const LaurentPoly& delta, int max_support) {
    return run_is_nice(delta, max_support, true);
}

NicenessVerdict is_nice_serial(const LaurentPoly& delta, int max_support) {
    return run_is_nice(delta, max_support, false);
}

} // namespace thurstonlab
