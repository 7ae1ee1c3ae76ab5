#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "koorn/weights.hpp"

using koorn::DominantWeight;
using koorn::Exponent;
using koorn::LaurentPoly;
using koorn::Rational;
using koorn::SymmetricPoly;

namespace {

// Every weakly decreasing nonnegative vector of length l with first part
// bounded by cap: the brute-force universe for dominance comparisons.
void all_partitions(int l, int cap, std::vector<int>& acc,
                    std::vector<DominantWeight>& out) {
    if (static_cast<int>(acc.size()) == l) {
        out.push_back(DominantWeight(acc));
        return;
    }
    int hi = acc.empty() ? cap : acc.back();
    for (int v = 0; v <= hi; ++v) {
        acc.push_back(v);
        all_partitions(l, cap, acc, out);
        acc.pop_back();
    }
}

std::vector<DominantWeight> partition_universe(int l, int cap) {
    std::vector<DominantWeight> out;
    std::vector<int> acc;
    all_partitions(l, cap, acc, out);
    return out;
}

}  // namespace

TEST_CASE("validation") {
    CHECK_THROWS_AS(DominantWeight({1, 2}), koorn::DomainError);
    CHECK_THROWS_AS(DominantWeight({-1}), koorn::DomainError);
    CHECK_THROWS_AS(DominantWeight({2, 1, -1}), koorn::DomainError);
    CHECK_THROWS_AS(DominantWeight({}), koorn::DimensionError);
    CHECK(DominantWeight::zero(3).parts() == std::vector<int>{0, 0, 0});
    CHECK(DominantWeight::zero(3).is_zero());
    CHECK(DominantWeight({3, 1}).norm() == 4);
    CHECK(DominantWeight({3, 1, 0}).str() == "(3,1,0)");
}

TEST_CASE("graded-lex order") {
    DominantWeight a({0, 0}), b({1, 0}), c({1, 1}), d({2, 0}), e({2, 1});
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK(d < e);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
}

TEST_CASE("dominance order examples") {
    CHECK(koorn::dominance_leq(DominantWeight({1, 1}), DominantWeight({2, 0})));
    CHECK_FALSE(koorn::dominance_leq(DominantWeight({2, 0}), DominantWeight({1, 1})));
    CHECK(koorn::dominance_leq(DominantWeight({1, 0}), DominantWeight({2, 1})));
    CHECK(koorn::dominance_leq(DominantWeight({0, 0}), DominantWeight({1, 0})));
    CHECK(koorn::dominance_leq(DominantWeight({2, 1, 1}), DominantWeight({3, 1, 0})));
    CHECK_FALSE(koorn::dominance_leq(DominantWeight({1, 1, 1}), DominantWeight({2, 0, 0})));
    // Incomparable pair (after the first partial sum one wins, later the other).
    CHECK_FALSE(koorn::dominance_leq(DominantWeight({3, 0, 0}), DominantWeight({2, 2, 2})));
    CHECK_FALSE(koorn::dominance_leq(DominantWeight({2, 2, 2}), DominantWeight({3, 0, 0})));
    CHECK_THROWS_AS(koorn::dominance_leq(DominantWeight({1}), DominantWeight({1, 0})),
                    koorn::DimensionError);
}

TEST_CASE("dominance order axioms") {
    for (int l = 1; l <= 3; ++l) {
        std::vector<DominantWeight> univ = partition_universe(l, 4);
        for (const auto& x : univ) {
            CHECK(koorn::dominance_leq(x, x));
            for (const auto& y : univ) {
                if (koorn::dominance_leq(x, y) && koorn::dominance_leq(y, x)) CHECK(x == y);
                for (const auto& z : univ)
                    if (koorn::dominance_leq(x, y) && koorn::dominance_leq(y, z))
                        CHECK(koorn::dominance_leq(x, z));
            }
        }
    }
}

TEST_CASE("weights_below matches brute force") {
    for (const auto& lam :
         {DominantWeight({2, 1}), DominantWeight({3, 1, 1}), DominantWeight({4}),
          DominantWeight({2, 2, 0}), DominantWeight({0, 0})}) {
        std::vector<DominantWeight> got = koorn::weights_below(lam);
        std::vector<DominantWeight> want;
        for (const auto& mu : partition_universe(lam.length(), lam.parts()[0]))
            if (koorn::dominance_leq(mu, lam)) want.push_back(mu);
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        // Sorted graded-lex ascending, ends at lam, starts at zero.
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(got.front() == DominantWeight::zero(lam.length()));
        CHECK(got.back() == lam);
    }
}

TEST_CASE("graded-lex refines dominance") {
    for (const auto& lam : {DominantWeight({3, 2, 1}), DominantWeight({4, 2})}) {
        std::vector<DominantWeight> below = koorn::weights_below(lam);
        for (const auto& mu : below)
            for (const auto& nu : below)
                if (mu != nu && koorn::dominance_leq(mu, nu)) CHECK(mu < nu);
    }
}

TEST_CASE("weyl orbits") {
    std::vector<Exponent> orb10 = koorn::weyl_orbit(DominantWeight({1, 0}));
    CHECK(orb10.size() == 4);
    std::set<Exponent> s10(orb10.begin(), orb10.end());
    CHECK(s10.count({1, 0}) == 1);
    CHECK(s10.count({-1, 0}) == 1);
    CHECK(s10.count({0, 1}) == 1);
    CHECK(s10.count({0, -1}) == 1);

    CHECK(koorn::weyl_orbit(DominantWeight({1, 1})).size() == 4);
    CHECK(koorn::weyl_orbit(DominantWeight({0, 0})).size() == 1);
    CHECK(koorn::weyl_orbit(DominantWeight({2, 1})).size() == 8);
    CHECK(koorn::weyl_orbit(DominantWeight({1, 1, 1})).size() == 8);
    CHECK(koorn::weyl_orbit(DominantWeight({2, 1, 0})).size() == 24);
    // Orbit size = 2^k * l! / (stabilizer of the multiset), k = #nonzero.
    CHECK(koorn::weyl_orbit(DominantWeight({2, 2, 1})).size() == 24);

    // Deterministically sorted, no duplicates.
    CHECK(std::is_sorted(orb10.begin(), orb10.end(), koorn::GradedLexLess{}));
}

TEST_CASE("orbit sums") {
    LaurentPoly m = koorn::orbit_sum(DominantWeight({1, 0}));
    CHECK(m.terms().size() == 4);
    CHECK(m.coeff({1, 0}) == Rational(1));
    CHECK(m.coeff({-1, 0}) == Rational(1));
    // x1 + 1/x1 + x2 + 1/x2 at (2, 3) = 35/6.
    CHECK(m.eval({Rational(2), Rational(3)}) == Rational(35, 6));

    LaurentPoly m0 = koorn::orbit_sum(DominantWeight::zero(2));
    CHECK(m0 == LaurentPoly::constant(2, Rational(1)));

    LaurentPoly m21 = koorn::orbit_sum(DominantWeight({2, 1}));
    CHECK(m21.terms().size() == 8);
    for (const auto& [mu, c] : m21.terms()) CHECK(c == Rational(1));
}

TEST_CASE("W-invariance predicate") {
    CHECK(koorn::is_W_invariant(koorn::orbit_sum(DominantWeight({2, 1}))));
    CHECK(koorn::is_W_invariant(LaurentPoly::constant(3, Rational(5))));
    CHECK(koorn::is_W_invariant(LaurentPoly(2)));
    CHECK_FALSE(koorn::is_W_invariant(LaurentPoly::monomial({1, 0}, Rational(1))));
    // Permutation-symmetric but not sign-flip symmetric.
    LaurentPoly f(2);
    f.add_term({1, 0}, Rational(1));
    f.add_term({0, 1}, Rational(1));
    CHECK_FALSE(koorn::is_W_invariant(f));
    // Sign-flip symmetric in each variable but not permutation-symmetric.
    LaurentPoly g(2);
    g.add_term({1, 0}, Rational(1));
    g.add_term({-1, 0}, Rational(1));
    CHECK_FALSE(koorn::is_W_invariant(g));
}

TEST_CASE("SymmetricPoly arithmetic and expansion") {
    SymmetricPoly p = SymmetricPoly::monomial(DominantWeight({1, 0}), Rational(2));
    p.add_term(DominantWeight::zero(2), Rational(-3));
    CHECK(p.coeff(DominantWeight({1, 0})) == Rational(2));
    CHECK(p.coeff(DominantWeight({1, 1})) == Rational(0));

    LaurentPoly e = p.expand();
    CHECK(e.coeff({0, 1}) == Rational(2));
    CHECK(e.coeff({0, 0}) == Rational(-3));
    CHECK(p.eval({Rational(2), Rational(3)}) == Rational(2) * Rational(35, 6) - Rational(3));

    SymmetricPoly q = p - p;
    CHECK(q.is_zero());
    CHECK(p + p == p.scaled(Rational(2)));
    CHECK(SymmetricPoly::one(2).expand() == LaurentPoly::constant(2, Rational(1)));
}

TEST_CASE("to_orbit_basis round-trips") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int l = 1; l <= 3; ++l) {
        std::vector<DominantWeight> univ = partition_universe(l, 3);
        for (int trial = 0; trial < 10; ++trial) {
            SymmetricPoly p(l);
            for (const auto& mu : univ)
                if (num(rng) > 2) p.add_term(mu, Rational(num(rng), den(rng)));
            SymmetricPoly back = koorn::to_orbit_basis(p.expand());
            CHECK(back == p);
        }
    }
}

TEST_CASE("to_orbit_basis rejects non-invariant input") {
    CHECK_THROWS_AS(koorn::to_orbit_basis(LaurentPoly::monomial({2, 0}, Rational(1))),
                    koorn::InvarianceError);
    LaurentPoly f(2);
    f.add_term({1, 0}, Rational(1));
    f.add_term({0, 1}, Rational(1));
    CHECK_THROWS_AS(koorn::to_orbit_basis(f), koorn::InvarianceError);
}
