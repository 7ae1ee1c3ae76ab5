#include "koorn/koornwinder.hpp"

#include "koorn/univariate.hpp"

namespace koorn {

namespace {

// Shared triangular back-substitution: given the matrix of D on a basis
// sorted graded-lex ascending (target weight last), solve for the monic
// eigenvector of the eigenvalue sitting in the bottom-right entry.
std::vector<Rational> back_substitute(const ExactMatrix& m,
                                      const std::vector<DominantWeight>& basis,
                                      const DominantWeight& lam) {
    const int n = m.rows();
    const Rational E = m.at(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i)
        if (m.at(i, i) == E)
            throw DegeneracyError("eigenvalue of " + lam.str() + " collides with that of " +
                                  basis[i].str() + "; cannot solve triangular system");
    std::vector<Rational> c(n, Rational(0));
    c[n - 1] = Rational(1);
    for (int i = n - 2; i >= 0; --i) {
        Rational acc(0);
        for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero()) acc += m.at(i, j) * c[j];
        c[i] = acc / (E - m.at(i, i));
    }
    return c;
}

}  // namespace

KoornwinderPoly koornwinder(const DominantWeight& lam, const ParamSet& p) {
    OperatorMatrix om = operator_matrix(lam, p);
    const int n = om.entries.rows();
    if (om.basis.back() != lam)
        throw InternalError("dominated-weight basis does not end at the target weight");
    if (om.entries.at(n - 1, n - 1) != eigenvalue_c(lam, p))
        throw InternalError("operator matrix diagonal disagrees with closed-form eigenvalue");

    std::vector<Rational> c = back_substitute(om.entries, om.basis, lam);
    SymmetricPoly coeffs(lam.length());
    for (int i = 0; i < n; ++i) coeffs.add_term(om.basis[i], c[i]);
    return KoornwinderPoly{lam, p, std::move(coeffs)};
}

SymmetricPoly verify_eigen(const KoornwinderPoly& P) {
    return apply_D(P.coeffs, P.params) - P.coeffs.scaled(eigenvalue_c(P.lam, P.params));
}

namespace {

// m_j as a one-variable rational function with monomial denominator:
// m_0 = 1 and m_j = x^j + x^{-j} = (x^{2j} + 1) / x^j for j >= 1, with the
// substitution x -> s x applied to the argument.
RatFun m_shifted(int j, const Rational& s) {
    if (j == 0) return RatFun::constant(Rational(1));
    // (s x)^j + (s x)^{-j} = (s^{2j} x^{2j} + 1) / (s^j x^j)
    UniPoly num = UniPoly::x_power(2 * j).scaled(s.pow(2L * j)) + UniPoly::constant(Rational(1));
    UniPoly den = UniPoly::x_power(j).scaled(s.pow(j));
    return RatFun(std::move(num), std::move(den));
}

// Laurent coefficient of x^k in a rational function whose denominator has
// been verified to be the monomial x^e.
Rational laurent_coeff(const RatFun& f, int k) {
    return f.num().coeff(k + f.den().degree());
}

}  // namespace

KoornwinderPoly one_var_oracle(const DominantWeight& lam, const ParamSet& p) {
    if (lam.length() != 1)
        throw DimensionError("one_var_oracle handles exactly one variable");
    const int deg = lam.parts()[0];
    const int n = deg + 1;
    const Rational one(1);

    // Operator coefficients as symbolic rational functions of x.
    const UniPoly x = UniPoly::x_power(1);
    const UniPoly x2 = UniPoly::x_power(2);
    auto lin = [&](const Rational& r) { return UniPoly::constant(r); };
    RatFun phi_plus(
        (lin(one) - x.scaled(p.a)) * (lin(one) - x.scaled(p.b)) *
            (lin(one) - x.scaled(p.c)) * (lin(one) - x.scaled(p.d)),
        (lin(one) - x2) * (lin(one) - x2.scaled(p.q)));
    RatFun phi_minus(
        (x - lin(p.a)) * (x - lin(p.b)) * (x - lin(p.c)) * (x - lin(p.d)),
        (x2 - lin(one)) * (x2 - lin(p.q)));

    // Matrix of D on m_0, ..., m_deg, every entry read off from an exact
    // symbolic expansion.
    ExactMatrix m(n, n);
    const Rational qinv = one / p.q;
    for (int j = 0; j < n; ++j) {
        RatFun mj = m_shifted(j, one);
        RatFun df = phi_plus * (m_shifted(j, p.q) - mj) + phi_minus * (m_shifted(j, qinv) - mj);
        if (!df.den_is_monomial())
            throw InternalError("image of orbit sum under D is not a Laurent polynomial");
        // Read symmetric Laurent coefficients; D preserves x <-> 1/x
        // symmetry, so the positive-degree side determines everything.
        for (int i = 1; i <= deg; ++i)
            if (laurent_coeff(df, i) != laurent_coeff(df, -i))
                throw InternalError("image of D lost inversion symmetry");
        int top = df.num().degree() - df.den().degree();
        if (top > j) throw InternalError("image of D exceeded the dominated-degree span");
        m.at(0, j) = laurent_coeff(df, 0);
        for (int i = 1; i <= deg; ++i) m.at(i, j) = laurent_coeff(df, i);
    }

    std::vector<DominantWeight> basis;
    basis.reserve(n);
    for (int j = 0; j < n; ++j) basis.push_back(DominantWeight({j}));

    std::vector<Rational> c = back_substitute(m, basis, lam);
    SymmetricPoly coeffs(1);
    for (int i = 0; i < n; ++i) coeffs.add_term(basis[i], c[i]);
    return KoornwinderPoly{lam, p, std::move(coeffs)};
}

}  // namespace koorn
