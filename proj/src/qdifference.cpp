#include "koorn/qdifference.hpp"

#include <algorithm>
#include <random>

namespace koorn {

namespace {

void check_point(int k, const std::vector<Rational>& x) {
    if (k < 0 || k >= static_cast<int>(x.size()))
        throw DimensionError("coefficient index out of range");
    for (const auto& xi : x)
        if (xi.is_zero()) throw DomainError("coefficient evaluated at zero coordinate");
}

Rational cross_factor_plus(int k, const std::vector<Rational>& x, const Rational& t) {
    const int l = static_cast<int>(x.size());
    const Rational one(1);
    Rational res(1);
    for (int i = 0; i < l; ++i) {
        if (i == k) continue;
        Rational den = (x[k] - x[i]) * (x[k] * x[i] - one);
        if (den.is_zero()) throw PoleError("coefficient pole: coincident or inverse coordinates");
        res *= (t * x[k] - x[i]) * (t * x[k] * x[i] - one) / den;
    }
    return res;
}

Rational cross_factor_minus(int k, const std::vector<Rational>& x, const Rational& t) {
    const int l = static_cast<int>(x.size());
    const Rational one(1);
    Rational res(1);
    for (int i = 0; i < l; ++i) {
        if (i == k) continue;
        Rational den = (x[k] - x[i]) * (x[k] * x[i] - one);
        if (den.is_zero()) throw PoleError("coefficient pole: coincident or inverse coordinates");
        res *= (x[k] - t * x[i]) * (x[k] * x[i] - t) / den;
    }
    return res;
}

}  // namespace

Rational phi_plus_at(int k, const std::vector<Rational>& x, const ParamSet& p) {
    check_point(k, x);
    const Rational one(1);
    const Rational& xk = x[k];
    Rational xk2 = xk * xk;
    Rational den = (one - xk2) * (one - p.q * xk2);
    if (den.is_zero()) throw PoleError("coefficient pole at x_k^2 in {1, 1/q}");
    Rational num = (one - p.a * xk) * (one - p.b * xk) * (one - p.c * xk) * (one - p.d * xk);
    return num / den * cross_factor_plus(k, x, p.t);
}

Rational phi_minus_at(int k, const std::vector<Rational>& x, const ParamSet& p) {
    check_point(k, x);
    const Rational one(1);
    const Rational& xk = x[k];
    Rational xk2 = xk * xk;
    Rational den = (xk2 - one) * (xk2 - p.q);
    if (den.is_zero()) throw PoleError("coefficient pole at x_k^2 in {1, q}");
    Rational num = (xk - p.a) * (xk - p.b) * (xk - p.c) * (xk - p.d);
    return num / den * cross_factor_minus(k, x, p.t);
}

Rational eval_D_at(const LaurentPoly& f, const std::vector<Rational>& x, const ParamSet& p) {
    const int l = f.nvars();
    if (static_cast<int>(x.size()) != l)
        throw DimensionError("evaluation point length does not match variable count");
    const Rational f0 = f.eval(x);
    Rational acc(0);
    std::vector<Rational> shifted = x;
    for (int k = 0; k < l; ++k) {
        shifted[k] = x[k] * p.q;
        acc += phi_plus_at(k, x, p) * (f.eval(shifted) - f0);
        shifted[k] = x[k] / p.q;
        acc += phi_minus_at(k, x, p) * (f.eval(shifted) - f0);
        shifted[k] = x[k];
    }
    return acc;
}

Rational eigenvalue_c(const DominantWeight& lam, const ParamSet& p) {
    const int l = lam.length();
    const Rational one(1);
    const Rational lead = p.abcd() / p.q;
    Rational acc(0);
    for (int k = 1; k <= l; ++k) {
        long lk = lam.parts()[k - 1];
        acc += lead * p.t.pow(2L * l - k - 1) * (p.q.pow(lk) - one);
        acc += p.t.pow(k - 1) * (p.q.pow(-lk) - one);
    }
    return acc;
}

namespace {

// Deterministic generic rational points with pairwise-distinct coordinates,
// all > 1.  Values > 1 avoid the fixed denominator zeros x_k^2 = 1 and
// x_k x_i = 1 outright; remaining coincidences with parameter-dependent
// denominator zeros surface as PoleError and trigger a redraw with the
// next attempt's seed.
std::vector<std::vector<Rational>> sample_points(int l, int count, int attempt) {
    std::mt19937_64 rng(12345 + static_cast<unsigned long>(attempt));
    std::uniform_int_distribution<int> draw(1, 95);
    const Rational g(3, 2);
    std::vector<std::vector<Rational>> points;
    points.reserve(count);
    for (int pidx = 0; pidx < count; ++pidx) {
        Rational scale = g.pow(1 + pidx % 6);
        std::vector<Rational> x;
        std::vector<int> used;
        while (static_cast<int>(x.size()) < l) {
            int r = draw(rng);
            if (std::find(used.begin(), used.end(), r) != used.end()) continue;
            used.push_back(r);
            x.push_back(scale * Rational(97 + r, 97));
        }
        points.push_back(std::move(x));
    }
    return points;
}

}  // namespace

SymmetricPoly apply_D(const SymmetricPoly& f, const ParamSet& p) {
    const int l = f.nvars();
    if (f.is_zero()) return SymmetricPoly(l);

    // The image lives in the span of orbit sums over all weights dominated
    // by some element of the support.
    std::vector<DominantWeight> basis;
    for (const auto& [mu, c] : f.coeffs())
        for (auto& nu : weights_below(mu)) basis.push_back(std::move(nu));
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    const int n = static_cast<int>(basis.size());
    std::vector<LaurentPoly> basis_exp;
    basis_exp.reserve(n);
    for (const auto& mu : basis) basis_exp.push_back(orbit_sum(mu));
    const LaurentPoly fexp = f.expand();

    constexpr int kMaxAttempts = 20;
    constexpr int kValidationPoints = 2;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto points = sample_points(l, n + kValidationPoints, attempt);
        ExactMatrix A(n, n);
        std::vector<Rational> rhs(n, Rational(0));
        std::vector<Rational> coeffs;
        try {
            for (int i = 0; i < n; ++i) {
                rhs[i] = eval_D_at(fexp, points[i], p);
                for (int j = 0; j < n; ++j) A.at(i, j) = basis_exp[j].eval(points[i]);
            }
            coeffs = solve_exact(A, rhs);
        } catch (const PoleError&) {
            continue;
        } catch (const SingularMatrixError&) {
            continue;
        }
        // Exact agreement at held-out points certifies the interpolant: the
        // image is known to lie in the basis span, and there it is unique.
        for (int v = 0; v < kValidationPoints; ++v) {
            const auto& pt = points[n + v];
            Rational expect = eval_D_at(fexp, pt, p);
            Rational got(0);
            for (int j = 0; j < n; ++j) got += coeffs[j] * basis_exp[j].eval(pt);
            if (got != expect)
                throw InternalError("interpolated image of D failed held-out validation");
        }
        SymmetricPoly out(l);
        for (int j = 0; j < n; ++j) out.add_term(basis[j], coeffs[j]);
        return out;
    }
    throw InterpolationError("no usable sample configuration after 20 attempts");
}

OperatorMatrix operator_matrix(const DominantWeight& lam, const ParamSet& p) {
    std::vector<DominantWeight> basis = weights_below(lam);
    const int n = static_cast<int>(basis.size());
    ExactMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        SymmetricPoly img = apply_D(SymmetricPoly::monomial(basis[j], Rational(1)), p);
        for (const auto& [mu, c] : img.coeffs()) {
            auto it = std::lower_bound(basis.begin(), basis.end(), mu);
            if (it == basis.end() || *it != mu)
                throw InternalError("image of D left the dominated-weight span");
            m.at(static_cast<int>(it - basis.begin()), j) = c;
        }
    }
    return OperatorMatrix{std::move(basis), std::move(m)};
}

}  // namespace koorn
