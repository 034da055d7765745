#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"
#include "riordan/errors.hpp"
#include "riordan/schroeder.hpp"
#include "riordan/series.hpp"

using namespace riordan;

namespace {

Series one_plus(int degree, int window) {
    return add(Series::one(window), Series::monomial(1, degree, window));
}

Series x_plus(int degree, int window) {
    return add(Series::identity(window), Series::monomial(1, degree, window));
}

SchroederSolution solution(SchroederResult res) {
    REQUIRE(std::holds_alternative<SchroederSolution>(res));
    return std::get<SchroederSolution>(std::move(res));
}

}  // namespace

TEST_CASE("normalization divides out the constant term") {
    Series d = Series(std::vector<Rat>{2, 4, 0, -2});
    SchroederProblem prob = normalize(d, Series::identity(3));
    CHECK(prob.normalized);
    CHECK(prob.lambda == 1);
    CHECK(prob.d == Series(std::vector<Rat>{1, 2, 0, -1}));

    CHECK_THROWS_AS(normalize(Series::identity(3), Series::identity(3)), ZeroConstantTerm);
    CHECK_THROWS_AS(normalize(Series::one(3), Series::monomial(1, 2, 3)),
                    NotInvertibleForComposition);
}

TEST_CASE("doubling multiplier with unit weight, solved by hand") {
    SchroederProblem prob = normalize(one_plus(1, 3), scale(2, Series::identity(3)));
    const SchroederSolution& sol = solution(solve(prob));
    CHECK(sol.case_used == SchroederCase::UnitMultiplier);
    CHECK(sol.u.trunc_order() == 3);
    CHECK(sol.u[0] == 1);
    CHECK(sol.u[1] == -1);
    CHECK(sol.u[2] == Rat(2, 3));
    CHECK(sol.u[3] == Rat(-8, 21));
    CHECK(!order(residual(prob, sol.u)).has_value());
}

TEST_CASE("non-unit multipliers always fill the window") {
    Series d(std::vector<Rat>{3, 1, -2, 0, 1, 1, 0, 0, 2});
    Series h(std::vector<Rat>{0, Rat(1, 2), 1, 0, -1, 2, 0, 1, 0});
    SchroederProblem prob = normalize(d, h);
    const SchroederSolution& sol = solution(solve(prob));
    CHECK(sol.case_used == SchroederCase::UnitMultiplier);
    CHECK(sol.u.trunc_order() == 8);
    CHECK(!order(residual(prob, sol.u)).has_value());
    // the residual of the original, unnormalized equation vanishes as well
    CHECK(!order(sub(mul(d, compose(sol.u, h)), scale(3, sol.u))).has_value());
}

TEST_CASE("shifted case solves when the weight starts high enough") {
    Series d = add(one_plus(4, 10), Series::monomial(-2, 6, 10));
    Series h = x_plus(2, 10);
    SchroederProblem prob = normalize(d, h);
    const SchroederSolution& sol = solution(solve(prob));
    CHECK(sol.case_used == SchroederCase::Parabolic);
    CHECK(sol.k == 2);
    CHECK(sol.u.trunc_order() == 9);
    CHECK(!order(residual(prob, sol.u)).has_value());
    CHECK(order(sub(sol.u, Series::one(9))) == 3);
    for (int i = 1; i <= 6; ++i) CHECK(order_correspondence(sol, prob, i));
}

TEST_CASE("widening the window extends the solution without rewriting it") {
    Series d10 = one_plus(3, 10), h10 = x_plus(3, 10);
    Series d14 = one_plus(3, 14), h14 = x_plus(3, 14);
    const SchroederSolution& narrow = solution(solve(normalize(d10, h10)));
    const SchroederSolution& wide = solution(solve(normalize(d14, h14)));
    CHECK(equal_through(narrow.u, wide.u, narrow.u.trunc_order()));
}

TEST_CASE("a low weight coefficient blocks the shifted case") {
    Series h = x_plus(3, 8);
    SchroederResult res = solve(normalize(one_plus(1, 8), h));
    REQUIRE(std::holds_alternative<NoSolution>(res));
    CHECK(std::get<NoSolution>(res).violating_index == 1);

    SchroederResult res2 = solve(normalize(one_plus(2, 8), h));
    REQUIRE(std::holds_alternative<NoSolution>(res2));
    CHECK(std::get<NoSolution>(res2).violating_index == 2);

    CHECK(std::holds_alternative<SchroederSolution>(solve(normalize(one_plus(3, 8), h))));
}

TEST_CASE("identity substitution leaves only the trivial equation") {
    SchroederProblem flat = normalize(Series::one(6), Series::identity(6));
    const SchroederSolution& sol = solution(solve(flat));
    CHECK(sol.case_used == SchroederCase::Parabolic);
    CHECK(sol.k == 0);
    CHECK(order(sub(sol.u, Series::one(sol.u.trunc_order()))) == std::nullopt);

    SchroederResult res = solve(normalize(one_plus(2, 6), Series::identity(6)));
    REQUIRE(std::holds_alternative<NoSolution>(res));
    CHECK(std::get<NoSolution>(res).violating_index == 2);
}

TEST_CASE("negated multiplier is rejected") {
    Series h = scale(-1, Series::identity(6));
    CHECK_THROWS_AS(solve(normalize(Series::one(6), h)), UnsupportedNegativeUnit);
}

TEST_CASE("solving twice gives the same series") {
    SchroederProblem prob = normalize(one_plus(2, 8), scale(3, Series::identity(8)));
    CHECK(solution(solve(prob)).u == solution(solve(prob)).u);
}

TEST_CASE("order correspondence guards its window") {
    SchroederProblem prob = normalize(one_plus(4, 10), x_plus(2, 10));
    const SchroederSolution& sol = solution(solve(prob));
    CHECK_THROWS_AS(order_correspondence(sol, prob, 0), std::invalid_argument);
    CHECK_THROWS_AS(order_correspondence(sol, prob, 100), TruncationTooShort);

    SchroederProblem unit = normalize(Series::one(6), scale(2, Series::identity(6)));
    const SchroederSolution& usol = solution(solve(unit));
    CHECK_THROWS_AS(order_correspondence(usol, unit, 1), std::invalid_argument);
}
