#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "koorn/torus.hpp"

using koorn::DominantWeight;
using koorn::KoornwinderPoly;
using koorn::NumericParams;
using koorn::ParamSet;
using koorn::QuadratureConfig;
using koorn::Rational;
using koorn::SymmetricPoly;
using std::complex;

namespace {

ParamSet ps1() {
    return ParamSet(Rational(1, 2), Rational(1, 3), Rational(1, 2), Rational(-1, 3),
                    Rational(1, 4), Rational(1, 5));
}

ParamSet ps_free(Rational q, Rational t) {
    return ParamSet(q, t, Rational(0), Rational(0), Rational(0), Rational(0));
}

// Independent recomputation of the half weight: same mathematical object,
// different code path (per-factor lambdas, products taken in descending k).
complex<double> oracle_weight_plus(const std::vector<complex<double>>& x,
                                   const NumericParams& p, int N) {
    auto poch = [&](complex<double> z) {
        complex<double> out{1.0, 0.0};
        for (int k = N - 1; k >= 0; --k) out *= 1.0 - z * std::pow(p.q, k);
        return out;
    };
    const int l = static_cast<int>(x.size());
    complex<double> out{1.0, 0.0};
    for (int i = 0; i < l; ++i) {
        complex<double> xi = x[static_cast<size_t>(i)];
        out *= poch(xi * xi);
        out /= poch(p.a * xi) * poch(p.b * xi) * poch(p.c * xi) * poch(p.d * xi);
    }
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            complex<double> xi = x[static_cast<size_t>(i)], xj = x[static_cast<size_t>(j)];
            out *= poch(xi * xj) * poch(xi / xj);
            out /= poch(p.t * xi * xj) * poch(p.t * xi / xj);
        }
    return out;
}

std::vector<complex<double>> torus_point(const std::vector<double>& angles) {
    std::vector<complex<double>> x;
    for (double th : angles) x.push_back(std::polar(1.0, th));
    return x;
}

}  // namespace

TEST_CASE("numeric conversion enforces the orthogonality grade") {
    NumericParams np = NumericParams::from(ps1());
    CHECK(np.q == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(np.d == doctest::Approx(0.2).epsilon(1e-15));
    ParamSet far(Rational(1, 2), Rational(1, 3), Rational(1, 2), Rational(-1, 3),
                 Rational(1, 4), Rational(12));
    CHECK_THROWS_AS(NumericParams::from(far), koorn::ParamError);
}

TEST_CASE("config validation") {
    SymmetricPoly one = SymmetricPoly::one(1);
    CHECK_THROWS_AS(koorn::torus_inner(one, one, ps1(), QuadratureConfig{10, 2}),
                    koorn::DomainError);
    CHECK_THROWS_AS(koorn::torus_inner(one, one, ps1(), QuadratureConfig{-1, 16}),
                    koorn::DomainError);
}

TEST_CASE("weight worked example") {
    // One factor per truncation term: at N = 1, l = 1, a = b = c = d = .0,
    // Delta(x) = (1 - x^2)(1 - x^{-2}); at x = i both factors are 2.
    NumericParams p = NumericParams::from(ps_free(Rational(1, 2), Rational(1, 3)));
    complex<double> x{0.0, 1.0};
    complex<double> w = koorn::weight({x}, p, 1);
    CHECK(w.real() == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(std::abs(w.imag()) < 1e-14);

    // N = 0 empty products: Delta is identically 1.
    CHECK(koorn::weight({x}, p, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("weight matches the independent oracle") {
    NumericParams p = NumericParams::from(ps1());
    for (const auto& angles : std::vector<std::vector<double>>{
             {0.3}, {2.1}, {0.3, 1.9}, {5.1, 2.7}, {0.4, 1.1, 3.9}}) {
        std::vector<complex<double>> x = torus_point(angles);
        std::vector<complex<double>> xinv;
        for (const auto& z : x) xinv.push_back(1.0 / z);
        complex<double> got = koorn::weight(x, p, 25);
        complex<double> want = oracle_weight_plus(x, p, 25) * oracle_weight_plus(xinv, p, 25);
        CHECK(std::abs(got - want) <= 1e-14 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("weight is real and nonnegative on the torus") {
    NumericParams p = NumericParams::from(
        ParamSet(Rational(3, 5), Rational(1, 2), Rational(1, 2), Rational(-1, 2),
                 Rational(1, 3), Rational(-1, 3)));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            std::vector<complex<double>> x = torus_point(
                {2 * std::numbers::pi * i / 12.0, 2 * std::numbers::pi * j / 12.0 + 0.05});
            complex<double> w = koorn::weight(x, p, 30);
            CHECK(std::abs(w.imag()) <= 1e-10 * (1.0 + std::abs(w)));
            CHECK(w.real() >= -1e-10 * (1.0 + std::abs(w)));
        }
}

TEST_CASE("quadrature is exact for Laurent averages below the grid order") {
    // With N = 0 the weight is 1 and the sum computes plain torus averages
    // of f(x) g(1/x), i.e. constant terms, exactly up to roundoff.
    ParamSet p = ps_free(Rational(1, 2), Rational(1, 3));
    QuadratureConfig cfg{0, 16};

    SymmetricPoly m1 = SymmetricPoly::monomial(DominantWeight({1}), Rational(1));
    SymmetricPoly m2 = SymmetricPoly::monomial(DominantWeight({2}), Rational(1));
    // <m1, m1> = const term of (x + 1/x)^2 = 2.
    CHECK(std::abs(koorn::torus_inner(m1, m1, p, cfg) - complex<double>{2.0, 0.0}) < 1e-13);
    // <m1, m2> = 0.
    CHECK(std::abs(koorn::torus_inner(m1, m2, p, cfg)) < 1e-13);
    // <m2, m2> = 2.
    CHECK(std::abs(koorn::torus_inner(m2, m2, p, cfg) - complex<double>{2.0, 0.0}) < 1e-13);

    SymmetricPoly m10 = SymmetricPoly::monomial(DominantWeight({1, 0}), Rational(1));
    SymmetricPoly m11 = SymmetricPoly::monomial(DominantWeight({1, 1}), Rational(1));
    // <m10, m10> = const term of (x1+1/x1+x2+1/x2)(same) = 4.
    CHECK(std::abs(koorn::torus_inner(m10, m10, p, cfg) - complex<double>{4.0, 0.0}) <
          1e-13);
    // m10 * m11 has no constant term.
    CHECK(std::abs(koorn::torus_inner(m10, m11, p, cfg)) < 1e-13);
    // <m11, m11>: (x1 x2 + x1/x2 + x2/x1 + 1/(x1 x2)) against itself -> 4.
    CHECK(std::abs(koorn::torus_inner(m11, m11, p, cfg) - complex<double>{4.0, 0.0}) <
          1e-13);
}

TEST_CASE("no degenerate points arise at admissible parameters") {
    long skipped = -1;
    SymmetricPoly m1 = SymmetricPoly::monomial(DominantWeight({1, 0}), Rational(1));
    koorn::torus_inner(m1, m1, ps1(), QuadratureConfig{20, 12}, &skipped);
    CHECK(skipped == 0);
}

TEST_CASE("orthogonality of a single pair") {
    ParamSet p = ps1();
    KoornwinderPoly P0 = koorn::koornwinder(DominantWeight({0}), p);
    KoornwinderPoly P1 = koorn::koornwinder(DominantWeight({1}), p);
    koorn::GramResult g = koorn::gram({P0, P1}, QuadratureConfig{40, 64});
    CHECK(g.max_offdiag_normalized() < 1e-8);
    CHECK(g.entries[0][0].real() > 0.0);
    CHECK(g.entries[1][1].real() > 0.0);
}

TEST_CASE("gram matrix, doubling convergence, diagonals") {
    ParamSet p = ps1();
    std::vector<DominantWeight> lams = {DominantWeight({0, 0}), DominantWeight({1, 0}),
                                        DominantWeight({1, 1}), DominantWeight({2, 0})};
    koorn::GramResult g1 = koorn::gram(lams, p, QuadratureConfig{40, 64});
    koorn::GramResult g2 = koorn::gram(lams, p, QuadratureConfig{80, 128});

    CHECK(g1.max_offdiag_normalized() < 1e-8);
    CHECK(g2.max_offdiag_normalized() < 1e-8);
    CHECK(g1.max_delta(g2) < 1e-10);
    CHECK(g1.total_points == 64L * 64L);
    CHECK(g1.skipped == 0);
    CHECK(g1.lams == lams);
    for (size_t i = 0; i < lams.size(); ++i) {
        CHECK(g1.entries[i][i].real() > 0.0);
        CHECK(std::abs(g1.entries[i][i].imag()) < 1e-10 * (1.0 + g1.entries[i][i].real()));
    }
    // Hermitian up to quadrature noise.
    for (size_t i = 0; i < lams.size(); ++i)
        for (size_t j = 0; j < lams.size(); ++j)
            CHECK(std::abs(g1.entries[i][j] - std::conj(g1.entries[j][i])) < 1e-10);
}

TEST_CASE("operator is self-adjoint in the quadrature inner product") {
    ParamSet p = ps1();
    QuadratureConfig cfg{40, 64};
    SymmetricPoly f = SymmetricPoly::monomial(DominantWeight({1, 0}), Rational(1));
    SymmetricPoly g = SymmetricPoly::monomial(DominantWeight({1, 1}), Rational(1));
    g.add_term(DominantWeight({0, 0}), Rational(2, 3));
    complex<double> lhs = koorn::torus_inner(koorn::apply_D(f, p), g, p, cfg);
    complex<double> rhs = koorn::torus_inner(f, koorn::apply_D(g, p), p, cfg);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * (1.0 + std::max(std::abs(lhs), std::abs(rhs))));
}

TEST_CASE("report helper formulas") {
    koorn::GramResult a, b;
    a.entries = {{{4.0, 0.0}, {0.2, 0.0}}, {{0.2, 0.0}, {1.0, 0.0}}};
    b.entries = {{{4.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {2.0, 0.0}}};
    CHECK(a.max_offdiag_normalized() == doctest::Approx(0.1).epsilon(1e-12));
    // Largest delta is |1 - 2| / (1 + 2) = 1/3.
    CHECK(a.max_delta(b) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    koorn::GramResult c;
    c.entries = {{{1.0, 0.0}}};
    CHECK(c.max_offdiag_normalized() == 0.0);
    CHECK_THROWS_AS(a.max_delta(c), koorn::DimensionError);
}

TEST_CASE("quadrature converges as truncation and grid refine") {
    ParamSet p = ps1();
    std::vector<DominantWeight> lams = {DominantWeight({0}), DominantWeight({1}),
                                        DominantWeight({2}), DominantWeight({3})};
    double off20 = koorn::gram(lams, p, QuadratureConfig{20, 32}).max_offdiag_normalized();
    double off40 = koorn::gram(lams, p, QuadratureConfig{40, 64}).max_offdiag_normalized();
    CHECK(off40 < 1e-8);
    CHECK(off40 <= off20 + 1e-12);
}
