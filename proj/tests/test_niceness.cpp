#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "thurstonlab/fuzz.hpp"
#include "thurstonlab/niceness.hpp"

using namespace thurstonlab;

namespace {

// Brute-force oracle: search nonzero primitive covectors in a box for one
// that kills the polynomial.
std::optional<VecZ> boxed_killer(const LaurentPoly& p, std::int64_t box) {
    const int n = p.nvars();
    VecZ phi(n, -box);
    for (;;) {
        if (!is_zero(phi)) {
            std::int64_t g = 0;
            for (auto x : phi) g = std::gcd(g, x < 0 ? -x : x);
            if (g == 1 && specialize(p, Covector{phi}).is_zero()) return phi;
        }
        int i = n - 1;
        while (i >= 0 && phi[i] == box) { phi[i] = -box; --i; }
        if (i < 0) break;
        ++phi[i];
    }
    return std::nullopt;
}

LaurentPoly translate(const LaurentPoly& p, const VecZ& shift) {
    std::map<VecZ, Int> t;
    for (const auto& [e, c] : p.terms()) {
        VecZ e2(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) e2[i] = checked_add(e[i], shift[i]);
        t[e2] = c;
    }
    return LaurentPoly(p.nvars(), std::move(t));
}

LaurentPoly unimodular(const LaurentPoly& p, const MatZ& u) {
    std::map<VecZ, Int> t;
    for (const auto& [e, c] : p.terms()) {
        VecZ e2(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) e2[i] = dot(u[i], e);
        t[e2] = c;
    }
    return LaurentPoly(p.nvars(), std::move(t));
}

} // namespace

TEST_CASE("face sum criterion") {
    LaurentPoly tri(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(face_sum_criterion(tri));

    LaurentPoly quad(2, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, 1}, {{1, 1}, -1}});
    CHECK_FALSE(face_sum_criterion(quad));

    CHECK(face_sum_criterion(LaurentPoly::constant(2, 5)));
    CHECK_THROWS_AS(face_sum_criterion(LaurentPoly(2)), precondition_error);
}

TEST_CASE("spec examples decide correctly") {
    LaurentPoly xmy(2, {{{1, 0}, 1}, {{0, 1}, -1}});
    NicenessVerdict v = is_nice(xmy);
    REQUIRE(v.status == nice_status::not_nice);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->entries == VecZ{1, 1});
    CHECK(specialize(xmy, *v.witness).is_zero());

    LaurentPoly quad(2, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, 1}, {{1, 1}, -1}});
    NicenessVerdict v2 = is_nice(quad);
    REQUIRE(v2.status == nice_status::not_nice);
    REQUIRE(v2.witness.has_value());
    CHECK(specialize(quad, *v2.witness).is_zero());
    // The advertised witness is also a killer.
    CHECK(specialize(quad, Covector{{0, 1}}).is_zero());

    LaurentPoly tri(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(is_nice(tri).status == nice_status::nice);
}

TEST_CASE("degenerate inputs") {
    NicenessVerdict z = is_nice(LaurentPoly(3));
    CHECK(z.status == nice_status::not_nice);
    REQUIRE(z.witness.has_value());
    CHECK(z.witness->entries == VecZ{1, 0, 0});

    // One variable: nonzero means nice.
    LaurentPoly p1(1, {{{2}, 3}, {{5}, -3}});
    CHECK(is_nice(p1).status == nice_status::nice);

    // Single monomial.
    CHECK(is_nice(LaurentPoly::monomial(2, {3, -4}, 7)).status == nice_status::nice);
}

TEST_CASE("cutoff falls back to the face-sum criterion") {
    LaurentPoly tri(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(is_nice(tri, 2).status == nice_status::sufficient_only_pass);
    LaurentPoly quad(2, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, 1}, {{1, 1}, -1}});
    CHECK(is_nice(quad, 3).status == nice_status::undecided);
}

TEST_CASE("exact decision agrees with the boxed oracle") {
    Rng rng(60606);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int nvars = static_cast<int>(rng.range(2, 3));
        LaurentPoly p = random_laurent(rng, nvars, static_cast<int>(rng.range(1, 5)), 2, 2);
        NicenessVerdict v = is_nice(p);
        auto killer = boxed_killer(p, 5);
        if (v.status == nice_status::nice) {
            CHECK_FALSE(killer.has_value());
        } else {
            REQUIRE(v.status == nice_status::not_nice);
            REQUIRE(v.witness.has_value());
            CHECK(specialize(p, *v.witness).is_zero());
        }
        if (killer) CHECK(v.status == nice_status::not_nice);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("face-sum pass implies nice") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        int nvars = static_cast<int>(rng.range(2, 3));
        LaurentPoly p = random_laurent(rng, nvars, static_cast<int>(rng.range(1, 6)), 3, 2);
        if (face_sum_criterion(p)) CHECK(is_nice(p).status == nice_status::nice);
    }
}

TEST_CASE("invariance under translation and unimodular change") {
    Rng rng(909);
    MatZ u = {{1, 1}, {0, 1}}; // shear
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly p = random_laurent(rng, 2, static_cast<int>(rng.range(1, 5)), 2, 2);
        nice_status s = is_nice(p).status;
        VecZ shift = {rng.range(-3, 3), rng.range(-3, 3)};
        CHECK(is_nice(translate(p, shift)).status == s);
        CHECK(is_nice(unimodular(p, u)).status == s);
    }
}

TEST_CASE("parallel and serial searches agree") {
    Rng rng(111);
    for (int trial = 0; trial < 40; ++trial) {
        int nvars = static_cast<int>(rng.range(2, 3));
        LaurentPoly p = random_laurent(rng, nvars, static_cast<int>(rng.range(1, 6)), 2, 2);
        NicenessVerdict a = is_nice(p);
        NicenessVerdict b = is_nice_serial(p);
        CHECK(a.status == b.status);
        CHECK((a.witness.has_value()) == (b.witness.has_value()));
        if (a.witness) CHECK(a.witness->entries == b.witness->entries);
    }
}
