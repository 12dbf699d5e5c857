#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/multipoly.hpp"
#include "polyspace/rational.hpp"
#include "polyspace/serialize.hpp"

using namespace polyspace;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("0.15") == Rational(3, 20));
    CHECK(parse_rational(" 1e-2 ") == Rational(1, 100));
    CHECK(parse_rational("2.5E1") == 25);
    CHECK(parse_rational("-.5") == Rational(-1, 2));
    for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.2.3", "--1", "3/", "e5"})
        CHECK_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(2)) == "2/1");
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(to_string(oracle::frac(-6, 4)) == "-3/2");
    CHECK(to_decimal(Rational(1, 50), 4) == "0.0200");
    CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(Rational(5), 0) == "5");
    CHECK(factorial(5) == 120);
}

TEST_CASE("rational round trip on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int k = 0; k < 500; ++k) {
        long den = d(rng);
        if (den == 0) den = 1;
        Rational q = oracle::frac(d(rng), den);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("grlex order and monomial lists") {
    auto mons = monomials_of_degree(3, 2);
    REQUIRE(mons.size() == 6);
    CHECK(mons.front() == MultiIndex{2, 0, 0});
    CHECK(mons[1] == MultiIndex{1, 1, 0});
    CHECK(mons.back() == MultiIndex{0, 0, 2});
    CHECK(monomials_of_degree(4, 3, 1).size() == 10);
    GrlexGreater g;
    CHECK(g(MultiIndex{0, 0, 2}, MultiIndex{1, 0, 0}));
    CHECK(g(MultiIndex{1, 0, 0}, MultiIndex{0, 1, 0}));
}

TEST_CASE("polynomial arithmetic") {
    auto x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    auto p = (x + y).pow(2);
    CHECK(p == x * x + Rational(2) * x * y + y * y);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK_FALSE((p + MultiPoly::constant(3, 1)).is_homogeneous());
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK((x - y) * (x + y) == x * x - y * y);
    CHECK(p.coefficient(MultiIndex{1, 1, 0}) == 2);
    CHECK(evaluate(p * z, std::vector<Rational>{1, 2, Rational(1, 3)}) == 3);
    CHECK(p.to_string("x") == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(MultiPoly(3).to_string() == "0");
    CHECK_THROWS_AS(p + MultiPoly::variable(4, 0), Error);
}

TEST_CASE("calculus helpers") {
    auto p = parse_polynomial("x1^3*x2 - 2*x2^2 + 5", 2);
    CHECK(differentiate(p, MultiIndex{1, 0}) == parse_polynomial("3*x1^2*x2", 2));
    CHECK(differentiate(p, MultiIndex{2, 1}) == parse_polynomial("6*x1", 2));
    CHECK(differentiate(p, MultiIndex{4, 0}).is_zero());
    auto sub = substitute(p, 0, parse_polynomial("1 - x2", 2));
    for (int v = -3; v <= 3; ++v) {
        Rational t = oracle::frac(v, 2);
        CHECK(evaluate(sub, std::vector<Rational>{0, t}) == evaluate(p, std::vector<Rational>{1 - t, t}));
    }
    std::vector<std::size_t> swap{1, 0};
    CHECK(permute_variables(p, swap) == parse_polynomial("x2^3*x1 - 2*x1^2 + 5", 2));
    // (d1 + d2)^2 applied to x1^2 x2 = 2 x2 + 4 x1
    CHECK(apply_operator(parse_polynomial("(x1+x2)^2", 2), parse_polynomial("x1^2*x2", 2)) ==
          parse_polynomial("2*x2 + 4*x1", 2));
}

TEST_CASE("polynomial parser") {
    auto p = parse_polynomial("-(x1+x3)*(x4+x1)^2 + 3/2*x2 - 0.5", 4);
    CHECK(p.degree() == 3);
    CHECK(p.constant_term() == Rational(-1, 2));
    CHECK(parse_polynomial("r1*r2", 2, 'r') == MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1));
    for (const char* bad : {"x5", "x0", "x1 +", "(x1", "x1^", "y1", "x1^-1"})
        CHECK_THROWS_AS(parse_polynomial(bad, 4), Error);
}

TEST_CASE("polynomial json round trip") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(0, 3), c(-9, 9);
    for (int k = 0; k < 200; ++k) {
        MultiPoly p(4);
        for (int t = 0; t < 6; ++t)
            p.add_term(MultiIndex{unsigned(e(rng)), unsigned(e(rng)), unsigned(e(rng)), unsigned(e(rng))},
                       oracle::frac(c(rng), 1 + e(rng)));
        CHECK(poly_from_json(to_json(p), 4) == p);
        CHECK(parse_polynomial(p.to_string("x"), 4) == p);
    }
}
