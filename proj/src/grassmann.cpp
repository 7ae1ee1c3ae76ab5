#include "koorn/grassmann.hpp"

namespace koorn {

GrassmannSetup::GrassmannSetup(int n_, int l_, Rational q_, Rational s_, Rational u_)
    : n(n_), l(l_), q(std::move(q_)), s(std::move(s_)), u(std::move(u_)) {
    if (n < 2) throw DomainError("grassmannian setup needs n >= 2");
    if (l < 1 || 2 * l > n) throw DomainError("grassmannian setup needs 1 <= l <= n/2");
    if (!(Rational(0) < q && q < Rational(1)))
        throw DomainError("grassmannian setup needs 0 < q < 1 (got q = " + q.str() + ")");
    if (s.sign() <= 0 || u.sign() <= 0)
        throw DomainError("grassmannian setup needs positive s and u");
}

SignedWeight::SignedWeight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DimensionError("signed weight needs at least one part");
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1])
            throw DomainError("signed weight parts must be weakly decreasing");
}

SignedWeight spherical_embed(const DominantWeight& mu, const GrassmannSetup& g) {
    if (mu.length() != g.l)
        throw DimensionError("weight length does not match the grassmannian block size");
    std::vector<int> parts(static_cast<size_t>(g.n), 0);
    for (int i = 0; i < g.l; ++i) {
        parts[i] = mu.parts()[i];
        parts[g.n - 1 - i] = -mu.parts()[i];
    }
    return SignedWeight(std::move(parts));
}

Rational casimir_eigenvalue(const SignedWeight& lam, int n, const Rational& q) {
    if (lam.length() != n) throw DimensionError("casimir needs a weight of length n");
    if (q.is_zero()) throw DomainError("casimir needs nonzero q");
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += q.pow(2L * (lam.parts()[k - 1] + n - k));
    return acc;
}

ParamSet param_map(const GrassmannSetup& g) {
    const Rational su = g.s * g.u;
    Rational base = g.q * g.q;
    Rational a = -g.q * su;
    Rational b = -g.q / su;
    Rational c = g.q * g.s / g.u;
    Rational d = g.q.pow(2L * (g.n - 2 * g.l) + 1) * g.u / g.s;
    return ParamSet(base, base, std::move(a), std::move(b), std::move(c), std::move(d));
}

RadialReport radial_consistency(const std::vector<DominantWeight>& mus,
                                const GrassmannSetup& g) {
    if (mus.empty())
        throw InsufficientDataError("radial consistency needs at least one weight");
    const ParamSet params = param_map(g);
    const Rational chi0 =
        casimir_eigenvalue(spherical_embed(DominantWeight::zero(g.l), g), g.n, g.q);

    RadialReport report;
    bool have_kappa = false;
    for (const auto& mu : mus) {
        Rational e = eigenvalue_c(mu, params);
        Rational chi_diff = casimir_eigenvalue(spherical_embed(mu, g), g.n, g.q) - chi0;
        if (!have_kappa && !e.is_zero()) {
            report.kappa = chi_diff / e;
            have_kappa = true;
        }
        report.rows.push_back(RadialRow{mu, std::move(e), std::move(chi_diff), false});
    }
    if (!have_kappa)
        throw InsufficientDataError(
            "radial consistency needs a weight with nonzero eigenvalue to fit kappa");
    report.pass = true;
    for (auto& row : report.rows) {
        row.ok = (row.chi_diff == report.kappa * row.eigen);
        if (!row.ok) report.pass = false;
    }
    return report;
}

KoornwinderPoly spherical_restriction(const DominantWeight& mu, const GrassmannSetup& g) {
    if (mu.length() != g.l)
        throw DimensionError("weight length does not match the grassmannian block size");
    return koornwinder(mu, param_map(g));
}

}  // namespace koorn
