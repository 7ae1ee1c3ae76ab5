#pragma once

#include "koorn/koornwinder.hpp"
#include "koorn/params.hpp"
#include "koorn/weights.hpp"

namespace koorn {

// Discrete data for the quantum-Grassmannian correspondence: rank n of the
// big torus, block size l with 2l <= n, deformation parameter 0 < q < 1,
// and the two continuous family parameters s and u (nonzero).
struct GrassmannSetup {
    int n;
    int l;
    Rational q, s, u;

    GrassmannSetup(int n, int l, Rational q, Rational s, Rational u);
};

// Weakly decreasing integer vector (entries may be negative): a dominant
// weight for the big torus.
class SignedWeight {
  public:
    explicit SignedWeight(std::vector<int> parts);
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool operator==(const SignedWeight& o) const { return parts_ == o.parts_; }

  private:
    std::vector<int> parts_;
};

// Embedding of a small dominant weight mu (length l) into the big weight
// lattice: (mu_1, ..., mu_l, 0, ..., 0, -mu_l, ..., -mu_1) of length n.
SignedWeight spherical_embed(const DominantWeight& mu, const GrassmannSetup& g);

// Spectrum of the quadratic central element on the irreducible with highest
// weight lambda:  sum_{k=1}^{n} q^{2 (lambda_k + n - k)}.
Rational casimir_eigenvalue(const SignedWeight& lam, int n, const Rational& q);

// Specialization of the operator parameters induced by the Grassmannian
// data: base q^2 and
//   a = -q s u,  b = -q / (s u),  c = q s / u,  d = q^{2(n-2l)+1} u / s,
//   t = q^2.
// The result is always admissible in the interior (abcd = q^{4+2(n-2l)}).
ParamSet param_map(const GrassmannSetup& g);

// Spectral comparison between the two sides of the correspondence.  For
// each supplied mu the Casimir difference chi(embed(mu)) - chi(embed(0)) is
// compared against kappa * c(mu), where c is the operator eigenvalue at the
// mapped parameters and kappa is fitted from the first weight with nonzero
// eigenvalue (never assumed).  Throws InsufficientDataError when no nonzero
// mu is supplied.
struct RadialRow {
    DominantWeight mu;
    Rational eigen;
    Rational chi_diff;
    bool ok;
};
struct RadialReport {
    bool pass = false;
    Rational kappa;
    std::vector<RadialRow> rows;
};
RadialReport radial_consistency(const std::vector<DominantWeight>& mus, const GrassmannSetup& g);

// The eigenpolynomial attached to mu through the parameter map.
KoornwinderPoly spherical_restriction(const DominantWeight& mu, const GrassmannSetup& g);

}  // namespace koorn
