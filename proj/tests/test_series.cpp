#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <initializer_list>
#include <optional>
#include <vector>

#include "doctest.h"
#include "riordan/errors.hpp"
#include "riordan/series.hpp"

using namespace riordan;

namespace {

Series from_ints(std::initializer_list<int> cs) {
    std::vector<Rat> v;
    for (int c : cs) v.emplace_back(c);
    return Series(std::move(v));
}

}  // namespace

TEST_CASE("construction, access and order") {
    Series z = Series::zero(4);
    CHECK(z.trunc_order() == 4);
    CHECK(!order(z).has_value());

    Series x = Series::identity(6);
    CHECK(x[0] == 0);
    CHECK(x[1] == 1);
    CHECK(order(x) == 1);
    CHECK(x.coefficient(6) == 0);
    CHECK_THROWS_AS(x.coefficient(7), DegreeAboveTruncation);

    Series m = Series::monomial(Rat(3, 2), 4, 8);
    CHECK(order(m) == 4);
    CHECK(m[4] == Rat(3, 2));

    CHECK(Series::one(3)[0] == 1);
    CHECK(order(Series::constant(0, 3)) == std::nullopt);
}

TEST_CASE("ring operations on fixed series") {
    Series a = from_ints({1, 2, 0, -1, 3});
    Series b = from_ints({0, 1, 1, 2, -2});
    Series c = from_ints({2, -1, 1, 0, 1});

    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(add(a, negate(a)) == Series::zero(4));
    CHECK(sub(a, b) == add(a, negate(b)));
    CHECK(scale(Rat(-2), a) == mul(Series::constant(-2, 4), a));
    CHECK(mul(a, Series::one(4)) == a);
    CHECK(!order(mul(a, Series::zero(4))).has_value());
}

TEST_CASE("binary operations truncate to the smaller window") {
    Series wide = from_ints({1, 1, 1, 1, 1, 1, 1});
    Series narrow = from_ints({1, 0, 2});
    CHECK(add(wide, narrow).trunc_order() == 2);
    CHECK(mul(wide, narrow).trunc_order() == 2);
    CHECK(truncated(wide, 2) == from_ints({1, 1, 1}));
    CHECK(equal_through(wide, narrow, 0));
    CHECK(!equal_through(wide, narrow, 1));
    CHECK(wide != narrow);
}

TEST_CASE("reciprocal of 1 - x is the all-ones series") {
    Series g = from_ints({1, -1, 0, 0, 0, 0, 0, 0});
    Series inv = mul_inverse(g);
    for (int i = 0; i <= 7; ++i) CHECK(inv[i] == 1);
    CHECK(!order(sub(mul(g, inv), Series::one(7))).has_value());
    CHECK_THROWS_AS(mul_inverse(Series::identity(4)), ZeroConstantTerm);
}

TEST_CASE("substituting 2x into the geometric series doubles each term") {
    Series f = mul_inverse(from_ints({1, -1, 0, 0, 0, 0, 0, 0, 0}));
    Series g = scale(2, Series::identity(8));
    Series c = compose(f, g);
    Rat p = 1;
    for (int i = 0; i <= 8; ++i) {
        CHECK(c[i] == p);
        p *= 2;
    }
}

TEST_CASE("composition requires a constant-free inner series") {
    Series f = from_ints({1, 1, 1});
    CHECK_THROWS_AS(compose(f, Series::one(2)), CompositionOrderError);
    CHECK(compose(f, Series::zero(2)) == Series::one(2));
}

TEST_CASE("composition is associative") {
    Series f = from_ints({2, 1, -1, 0, 3, 1, 0, -2, 1});
    Series g = from_ints({0, 1, 2, -1, 0, 1, 1, 0, 2});
    Series w = from_ints({0, 2, -1, 1, 1, 0, -1, 1, 0});
    CHECK(compose(compose(f, g), w) == compose(f, compose(g, w)));
}

// the inverse of x - x^2 generates the Catalan numbers (OEIS A000108)
TEST_CASE("compositional inverse of x - x^2 counts binary trees") {
    Series h = from_ints({0, 1, -1, 0, 0, 0, 0, 0, 0});
    Series hbar = comp_inverse(h);
    const long catalan[] = {0, 1, 1, 2, 5, 14, 42, 132, 429};
    for (int i = 0; i <= 8; ++i) CHECK(hbar[i] == catalan[i]);
    CHECK(!order(sub(compose(h, hbar), Series::identity(8))).has_value());
    CHECK(!order(sub(compose(hbar, h), Series::identity(8))).has_value());
}

TEST_CASE("compositional inverse needs order exactly one") {
    CHECK_THROWS_AS(comp_inverse(Series::monomial(1, 2, 5)), NotInvertibleForComposition);
    CHECK_THROWS_AS(comp_inverse(Series::one(5)), NotInvertibleForComposition);
    CHECK_THROWS_AS(comp_inverse(Series::zero(5)), NotInvertibleForComposition);
}

TEST_CASE("compositional inverse agrees with Lagrange inversion") {
    const int n = 10;
    for (Series h : {from_ints({0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}),
                     from_ints({0, 1, 1, 2, -1, 0, 3, 0, -2, 1, 1}),
                     from_ints({0, 2, 1, 0, 0, -1, 0, 1, 0, 0, 2})}) {
        Series hbar = comp_inverse(h);
        // [x^m] hbar = (1/m) [x^{m-1}] (x/h)^m
        std::vector<Rat> down(h.coeffs().begin() + 1, h.coeffs().end());
        Series unit = mul_inverse(Series(std::move(down)));
        Series power = Series::one(n - 1);
        for (int m = 1; m <= n - 1; ++m) {
            power = mul(power, unit);
            Rat expected = power[m - 1] / m;
            CHECK(hbar[m] == expected);
        }
    }
}

TEST_CASE("fractional multiplier round trip") {
    std::vector<Rat> cs = {Rat(0), Rat(1, 2), Rat(-1, 3), Rat(5, 7), Rat(0), Rat(2, 9), Rat(1)};
    Series h(std::move(cs));
    Series hbar = comp_inverse(h);
    CHECK(hbar[1] == 2);
    CHECK(!order(sub(compose(h, hbar), Series::identity(6))).has_value());
}
