#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thurstonlab/numeric.hpp"

using namespace thurstonlab;

TEST_CASE("checked arithmetic traps overflow") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), precondition_error);
    CHECK_THROWS_AS(checked_mul(big, 2), precondition_error);
}

TEST_CASE("dot product") {
    CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
    CHECK_THROWS_AS(dot({1}, {1, 2}), precondition_error);
}

TEST_CASE("rational strings") {
    CHECK(rat_to_string(Rat(3)) == "3");
    CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
    CHECK(rat_from_string("-7/3") == Rat(-7, 3));
    CHECK(rat_from_string("12") == Rat(12));
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rat_from_string("abc"), input_error);
}

TEST_CASE("integer kernel of a covector") {
    CHECK(integer_kernel({{2, 4}}, 2) == MatZ{{2, -1}});
    CHECK(integer_kernel({{1, 0, 0}}, 3) == MatZ{{0, 1, 0}, {0, 0, 1}});
    CHECK(integer_kernel({{0, 0}}, 2) == MatZ{{1, 0}, {0, 1}});
    // Kernel elements actually annihilate.
    for (const auto& row : integer_kernel({{3, -6, 9}}, 3))
        CHECK(dot(row, {3, -6, 9}) == 0);
}

TEST_CASE("kernel is saturated") {
    // gcd of maximal minors of a saturated kernel basis is 1.
    MatZ k = integer_kernel({{2, 4}}, 2);
    CHECK(gcd_of_maximal_minors(k, 2) == 1);
    MatZ k3 = integer_kernel({{6, 10, 15}}, 3);
    CHECK(static_cast<int>(k3.size()) == 2);
    CHECK(gcd_of_maximal_minors(k3, 3) == 1);
}

TEST_CASE("hermite normal form is canonical") {
    MatZ a = hermite_normal_form({{2, 4}, {1, 2}}, 2);
    MatZ b = hermite_normal_form({{1, 2}, {2, 4}}, 2);
    CHECK(a == b);
    CHECK(a == MatZ{{1, 2}});
    CHECK(hermite_normal_form({{0, 0}}, 2).empty());
}

TEST_CASE("rank") {
    CHECK(rank({{1, 0}, {0, 1}}, 2) == 2);
    CHECK(rank({{1, 2}, {2, 4}}, 2) == 1);
    CHECK(rank({}, 3) == 0);
}
