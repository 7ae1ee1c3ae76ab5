#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koorn/laurent.hpp"

using koorn::Exponent;
using koorn::LaurentPoly;
using koorn::Rational;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int nterms) {
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    LaurentPoly f(nvars);
    for (int k = 0; k < nterms; ++k) {
        Exponent mu(static_cast<size_t>(nvars));
        for (auto& m : mu) m = e(rng);
        f.add_term(mu, Rational(num(rng), den(rng)));
    }
    return f;
}

std::vector<Rational> random_point(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<long> num(1, 12);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<Rational> x;
    for (int i = 0; i < nvars; ++i)
        x.push_back(Rational(sgn(rng) ? num(rng) : -num(rng), den(rng)));
    return x;
}

}  // namespace

TEST_CASE("constants and monomials") {
    LaurentPoly one = LaurentPoly::constant(2, Rational(1));
    CHECK(one.coeff({0, 0}) == Rational(1));
    CHECK(one.eval({Rational(5), Rational(-3)}) == Rational(1));

    LaurentPoly m = LaurentPoly::monomial({2, -1}, Rational(3, 4));
    CHECK(m.coeff({2, -1}) == Rational(3, 4));
    CHECK(m.coeff({1, 0}) == Rational(0));
    // 3/4 * 2^2 * (1/3)^{-1} = 9
    CHECK(m.eval({Rational(2), Rational(1, 3)}) == Rational(9));
}

TEST_CASE("add_term cancels to zero") {
    LaurentPoly f(1);
    f.add_term({3}, Rational(1, 2));
    f.add_term({3}, Rational(-1, 2));
    CHECK(f.is_zero());
    CHECK(f.terms().empty());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly f = random_poly(rng, 2, 4);
        LaurentPoly g = random_poly(rng, 2, 4);
        LaurentPoly h = random_poly(rng, 2, 3);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f - f == LaurentPoly(2));
        CHECK(f * LaurentPoly::constant(2, Rational(1)) == f);
        CHECK(f.scaled(Rational(-2)) + f.scaled(Rational(2)) == LaurentPoly(2));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly f = random_poly(rng, 3, 4);
        LaurentPoly g = random_poly(rng, 3, 4);
        std::vector<Rational> x = random_point(rng, 3);
        CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
        CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
        CHECK(f.scaled(Rational(7, 5)).eval(x) == f.eval(x) * Rational(7, 5));
    }
}

TEST_CASE("evaluation requires nonzero coordinates") {
    LaurentPoly f = LaurentPoly::monomial({-1, 2}, Rational(1));
    CHECK_THROWS_AS(f.eval({Rational(0), Rational(1)}), koorn::DomainError);
    CHECK_THROWS_AS(f.eval({Rational(1)}), koorn::DimensionError);
}

TEST_CASE("dimension mismatches are rejected") {
    LaurentPoly f(2), g(3);
    CHECK_THROWS_AS(f + g, koorn::DimensionError);
    CHECK_THROWS_AS(f - g, koorn::DimensionError);
    CHECK_THROWS_AS(f * g, koorn::DimensionError);
    CHECK_THROWS_AS(LaurentPoly::monomial({1, 2}, Rational(1)).coeff({1}),
                    koorn::DimensionError);
}

TEST_CASE("terms iterate in graded-lex order") {
    LaurentPoly f(2);
    f.add_term({1, 1}, Rational(1));
    f.add_term({0, 0}, Rational(2));
    f.add_term({2, -2}, Rational(3));
    f.add_term({-1, 2}, Rational(4));
    f.add_term({2, 0}, Rational(5));
    std::vector<Exponent> seen;
    for (const auto& [mu, c] : f.terms()) seen.push_back(mu);
    // Total degree ascending, then lexicographic.
    std::vector<Exponent> want = {{0, 0}, {2, -2}, {-1, 2}, {1, 1}, {2, 0}};
    CHECK(seen == want);
}

TEST_CASE("str smoke") {
    LaurentPoly f(2);
    f.add_term({1, -1}, Rational(2, 3));
    CHECK(f.str().find("2/3") != std::string::npos);
}
