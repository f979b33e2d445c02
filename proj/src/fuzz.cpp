#include "thurstonlab/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "thurstonlab/exceptional.hpp"
#include "thurstonlab/manifold_io.hpp"
#include "thurstonlab/simplex.hpp"
#include "thurstonlab/swtheory.hpp"

namespace thurstonlab {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x2545f4914f6cdd1dull * (index + 1)));
    return r.next();
}

DualBall random_ball(Rng& rng, int dim, long long coord_bound, int npoints) {
    std::vector<VecZ> pts;
    for (int k = 0; k < npoints; ++k) {
        VecZ p(dim);
        for (int i = 0; i < dim; ++i) p[i] = rng.range(-coord_bound, coord_bound);
        pts.push_back(negate(p));
        pts.push_back(std::move(p));
    }
    pts.push_back(VecZ(dim, 0));
    return DualBall::from_vertices(pts);
}

LaurentPoly random_laurent(Rng& rng, int nvars, int support_size, long long coeff_bound,
                           long long exp_bound) {
    std::map<VecZ, Int> terms;
    while (static_cast<int>(terms.size()) < support_size) {
        VecZ e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = rng.range(-exp_bound, exp_bound);
        long long c = rng.range(-coeff_bound, coeff_bound);
        if (c == 0) c = 1;
        terms[e] = c;
    }
    return LaurentPoly(nvars, std::move(terms));
}

SWSupport random_support(Rng& rng, int rank, int extra, long long value_bound) {
    std::map<VecZ, Int> entries;
    int n = 1 + static_cast<int>(rng.range(0, extra));
    for (int k = 0; k < n; ++k) {
        VecZ c(rank);
        for (int i = 0; i < rank; ++i) c[i] = rng.range(-3, 3);
        long long v = rng.range(-value_bound, value_bound);
        if (v == 0) v = 1;
        entries[c] = v;
    }
    return SWSupport::make(rank, std::move(entries));
}

namespace {

using json = nlohmann::json;

json vec_to_json(const VecQ& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

// One fuzz trial: returns an empty json on success, a reproducer on failure.
using Trial = std::function<json(std::uint64_t trial_seed)>;

FuzzReport run_trials(long long trials, std::uint64_t seed, bool parallel, const Trial& trial) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<json> results(trials);

    auto body = [&](long long i) {
        try {
            results[i] = trial(mix_seed(seed, static_cast<std::uint64_t>(i)));
        } catch (const std::exception& e) {
            results[i] = json{{"error", e.what()}};
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < trials; ++i) body(i);
    } else {
        for (long long i = 0; i < trials; ++i) body(i);
    }

    FuzzReport rep;
    rep.trials = trials;
    for (long long i = 0; i < trials; ++i) {
        if (results[i].is_null()) continue;
        if (rep.failures == 0) {
            rep.first_failure = results[i];
            rep.first_failure["trial"] = i;
        }
        ++rep.failures;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// Conservative bound on |l| with v + l w possibly inside the polytope.
long long translate_bound(const Polytope& p, const VecQ& w) {
    long long bound = 0;
    for (int i = 0; i < p.ambient_dim(); ++i) {
        if (w[i] == 0) continue;
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const auto& u : p.vertices()) {
            mn = std::min(mn, u[i]);
            mx = std::max(mx, u[i]);
        }
        Rat r = (mx - mn) / (w[i] < 0 ? -w[i] : w[i]);
        long long li = static_cast<long long>(numerator(r) / denominator(r)) + 1;
        bound = bound == 0 ? li : std::min(bound, li);
    }
    return bound;
}

json observation_trial(std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const int dim = static_cast<int>(rng.range(2, 3));

    std::vector<VecQ> pts;
    VecQ w(dim, 0);
    if (rng.chance(50)) {
        // Translate-union construction: the hypothesis holds by design.
        int npts = static_cast<int>(rng.range(2, 5));
        std::vector<VecQ> base;
        for (int k = 0; k < npts; ++k) {
            VecQ p(dim);
            for (int i = 0; i < dim; ++i) p[i] = rng.range(-3, 3);
            base.push_back(std::move(p));
        }
        while (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; }))
            for (int i = 0; i < dim; ++i) w[i] = rng.range(-2, 2);
        long long m = rng.range(1, 2);
        for (const auto& p : base) {
            VecQ q(dim);
            for (int i = 0; i < dim; ++i) q[i] = p[i] + Rat(m) * w[i];
            pts.push_back(p);
            pts.push_back(std::move(q));
        }
    } else {
        int npts = static_cast<int>(rng.range(1, 7));
        for (int k = 0; k < npts; ++k) {
            VecQ p(dim);
            for (int i = 0; i < dim; ++i) p[i] = rng.range(-3, 3);
            pts.push_back(std::move(p));
        }
        while (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; }))
            for (int i = 0; i < dim; ++i) w[i] = Rat(rng.range(-2, 2), rng.range(1, 2));
    }

    Polytope p = Polytope::hull(pts);
    ObservationResult r = observation_check(p, w);

    auto reproducer = [&](const std::string& why) {
        json points = json::array();
        for (const auto& v : pts) points.push_back(vec_to_json(v));
        return json{{"check", "observation"},
                    {"why", why},
                    {"points", points},
                    {"w", vec_to_json(w)}};
    };

    // Independent exhaustive recheck of the hypothesis.
    long long bound = translate_bound(p, w);
    bool expected = true;
    for (const auto& v : p.vertices()) {
        bool ok = false;
        for (long long l = -bound; l <= bound && !ok; ++l) {
            if (l == 0) continue;
            VecQ moved(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) moved[i] = v[i] + Rat(l) * w[i];
            ok = in_hull(p.vertices(), moved);
        }
        if (!ok) { expected = false; break; }
    }
    if (expected != r.hypothesis) return reproducer("hypothesis mismatch vs exhaustive scan");
    if (!r.hypothesis) return json();

    if (!r.edge_parallel || !r.vertex_witness) return reproducer("missing witnesses");

    // Edge parallel to w.
    const Segment& e = *r.edge_parallel;
    VecQ dir(e.a.size());
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = e.b[i] - e.a[i];
    bool parallel = true;
    std::optional<Rat> t;
    for (std::size_t i = 0; i < dir.size() && parallel; ++i) {
        if (w[i] == 0) {
            if (dir[i] != 0) parallel = false;
        } else if (!t) {
            t = dir[i] / w[i];
        } else if (dir[i] != *t * w[i]) {
            parallel = false;
        }
    }
    if (!parallel || !t || *t == 0) return reproducer("edge not parallel to w");

    LocateResult mid = locate(p, [&] {
        VecQ mp(e.a.size());
        for (std::size_t i = 0; i < mp.size(); ++i) mp[i] = (e.a[i] + e.b[i]) / 2;
        return mp;
    }());
    if (!mid.on_closed_edge()) return reproducer("edge midpoint not on an edge");

    VecQ moved(r.vertex_witness->size());
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] = (*r.vertex_witness)[i] + w[i];
    if (!locate(p, moved).on_closed_edge())
        return reproducer("vertex witness + w not on a closed edge");
    return json();
}

json claim_trial(std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const int dim = static_cast<int>(rng.range(2, 3));
    DualBall ball = random_ball(rng, dim, 3, static_cast<int>(rng.range(1, 4)));

    // Support: all vertices plus a few interior lattice points.
    std::map<VecZ, Int> entries;
    for (const auto& v : ball.integral_vertices()) {
        long long val = rng.range(-3, 3);
        entries[v] = val == 0 ? 1 : val;
    }
    for (int k = 0; k < 6; ++k) {
        VecZ p(dim);
        for (int i = 0; i < dim; ++i) p[i] = rng.range(-3, 3);
        if (entries.count(p)) continue;
        if (!in_hull(ball.ball().vertices(), to_rational(p))) continue;
        long long val = rng.range(-3, 3);
        entries[p] = val == 0 ? 1 : val;
    }

    Covector sigma{VecZ(dim, 0)};
    if (!rng.chance(5))
        for (int i = 0; i < dim; ++i) sigma.entries[i] = rng.range(-2, 2);

    // Euler class in the kernel of sigma with xi_test false.
    MatZ kernel = sigma.is_zero() ? hermite_normal_form([&] {
        MatZ id(dim, VecZ(dim, 0));
        for (int i = 0; i < dim; ++i) id[i][i] = 1;
        return id;
    }(), dim)
                                  : integer_kernel({sigma.entries}, dim);
    VecZ e(dim, 0);
    bool found = false;
    for (int attempt = 0; attempt < 30 && !kernel.empty() && !found; ++attempt) {
        VecZ cand(dim, 0);
        for (const auto& row : kernel) {
            long long c = rng.range(-3, 3);
            for (int i = 0; i < dim; ++i) cand[i] = checked_add(cand[i], checked_mul(c, row[i]));
        }
        if (!xi_test(ball, cand)) {
            e = cand;
            found = true;
        }
    }
    if (!found && !kernel.empty()) {
        std::int64_t c = 0;
        for (const auto& v : ball.integral_vertices())
            for (auto x : v) c = std::max<std::int64_t>(c, x < 0 ? -x : x);
        for (int i = 0; i < dim; ++i) e[i] = checked_mul(kernel[0][i], c + 1);
        if (xi_test(ball, e)) e = VecZ(dim, 0);
    }

    Manifold3 m{.name = "fuzz",
                .b1 = dim,
                .delta = std::nullopt,
                .dual_ball = ball,
                .sw = SWSupport::make(dim, entries),
                .fibered_marks = std::nullopt,
                .ball_source = "input"};

    auto reproducer = [&](const std::string& why) {
        json supp = json::array();
        for (const auto& [c1, v] : entries)
            supp.push_back(json{{"c1", c1}, {"value", int_to_json(v)}});
        json verts = json::array();
        for (const auto& v : ball.integral_vertices()) verts.push_back(v);
        return json{{"check", "claim"},
                    {"why", why},
                    {"ball_vertices", verts},
                    {"sw_support", supp},
                    {"sigma", sigma.entries},
                    {"euler", e}};
    };

    ClaimReport rep = claim_witness(m, e, sigma);
    if (!rep.hypothesis_violations.empty())
        return reproducer("generator produced a hypothesis violation");
    if (!rep.witness) return reproducer("no witness found");

    // Re-verify the witness with an independent orbit sum.
    const VecZ& h = *rep.witness;
    Int norm = thurston_norm(ball, sigma);
    if (Int(dot(sigma.entries, h)) != norm) return reproducer("witness is not norm-attaining");
    Int orbit_sum = 0;
    if (is_zero(e)) {
        orbit_sum = entries.at(h);
    } else {
        std::int64_t span = 0;
        for (const auto& [k, v] : entries) {
            (void)v;
            for (auto x : k) span = std::max<std::int64_t>(span, x < 0 ? -x : x);
        }
        for (long long l = -2 * span - 1; l <= 2 * span + 1; ++l) {
            VecZ moved(dim);
            for (int i = 0; i < dim; ++i)
                moved[i] = checked_add(h[i], checked_mul(2 * l, e[i]));
            auto it = entries.find(moved);
            if (it != entries.end() && Int(dot(sigma.entries, moved)) == norm)
                orbit_sum += it->second;
        }
    }
    if (orbit_sum == 0) return reproducer("witness orbit sum is zero on recheck");
    return json();
}

json norms_trial(std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const int dim = static_cast<int>(rng.range(2, 3));
    DualBall ball = random_ball(rng, dim, 3, static_cast<int>(rng.range(1, 4)));

    Covector sigma{VecZ(dim)}, tau{VecZ(dim)};
    for (int i = 0; i < dim; ++i) {
        sigma.entries[i] = rng.range(-5, 5);
        tau.entries[i] = rng.range(-5, 5);
    }
    long long k = rng.range(-4, 4);

    auto reproducer = [&](const std::string& why) {
        json verts = json::array();
        for (const auto& v : ball.integral_vertices()) verts.push_back(v);
        return json{{"check", "norms"},
                    {"why", why},
                    {"ball_vertices", verts},
                    {"sigma", sigma.entries},
                    {"tau", tau.entries},
                    {"k", k}};
    };

    Int ns = thurston_norm(ball, sigma);
    Int nt = thurston_norm(ball, tau);
    if (ns < 0) return reproducer("negative norm");

    Covector ksigma{VecZ(dim)};
    for (int i = 0; i < dim; ++i) ksigma.entries[i] = checked_mul(k, sigma.entries[i]);
    if (thurston_norm(ball, ksigma) != Int(k < 0 ? -k : k) * ns)
        return reproducer("homogeneity failure");

    Covector sum{VecZ(dim)};
    for (int i = 0; i < dim; ++i) sum.entries[i] = checked_add(sigma.entries[i], tau.entries[i]);
    if (thurston_norm(ball, sum) > ns + nt) return reproducer("subadditivity failure");

    if (thurston_norm(ball, Covector{negate(sigma.entries)}) != ns)
        return reproducer("symmetry failure");
    return json();
}

} // namespace

FuzzReport run_observation_fuzz(long long trials, std::uint64_t seed, bool parallel) {
    return run_trials(trials, seed, parallel, observation_trial);
}

FuzzReport run_claim_fuzz(long long trials, std::uint64_t seed, bool parallel) {
    return run_trials(trials, seed, parallel, claim_trial);
}

FuzzReport run_norms_fuzz(long long trials, std::uint64_t seed, bool parallel) {
    return run_trials(trials, seed, parallel, norms_trial);
}

} // namespace thurstonlab
