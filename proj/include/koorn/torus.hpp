#pragma once

#include <complex>
#include <vector>

#include "koorn/koornwinder.hpp"
#include "koorn/params.hpp"
#include "koorn/weights.hpp"

namespace koorn {

// Double-precision image of a parameter tuple, restricted to the stricter
// grade needed for torus orthogonality (|a|, |b|, |c|, |d| < 1 on top of
// the base condition).  Conversion throws ParamError otherwise.
struct NumericParams {
    double q, t, a, b, c, d;
    static NumericParams from(const ParamSet& p);
};

// Truncation and grid resolution for quadrature on the torus: infinite
// q-shifted factorials are truncated to `trunc` factors, each angular
// coordinate runs over the `grid`-th roots of unity.
struct QuadratureConfig {
    int trunc = 40;
    int grid = 64;
};

// Complex integer power (exact small-exponent ladder; negative exponents
// via one division).
std::complex<double> cpow_int(std::complex<double> z, int e);

// Evaluation of a Laurent polynomial at a complex point.
std::complex<double> eval_complex(const LaurentPoly& f,
                                  const std::vector<std::complex<double>>& x);

// Truncated q-shifted factorial (z; q)_N over the complex numbers.
std::complex<double> qpoch_complex(std::complex<double> z, double q, int trunc);

// Half-weight Delta^+(x): per-variable factors (x_i^2; q) over the four
// (e x_i; q) with e in {a,b,c,d}, and pair factors (x_i x_j; q)(x_i/x_j; q)
// over (t x_i x_j; q)(t x_i / x_j; q), all truncated to `trunc` terms.
// Throws DegeneratePointError when a truncated denominator factor is
// numerically zero at x.
std::complex<double> weight_plus(const std::vector<std::complex<double>>& x,
                                 const NumericParams& p, int trunc);

// Full weight Delta(x) = Delta^+(x) * Delta^+(x^{-1}), computed literally
// (no conjugation shortcut), so its realness and nonnegativity on the torus
// are checkable facts rather than construction artifacts.
std::complex<double> weight(const std::vector<std::complex<double>>& x, const NumericParams& p,
                            int trunc);

// Quadrature value of  (1 / |grid|^l) * sum_x f(x) g(x^{-1}) Delta(x)  over
// the grid of `grid`-th roots of unity in each coordinate, with degenerate
// points excluded and the average renormalized to the surviving points.
// Contributions are combined by pairwise (tree) summation in grid order, so
// the result is bit-deterministic.  `skipped`, when non-null, receives the
// number of excluded points.
std::complex<double> torus_inner(const SymmetricPoly& f, const SymmetricPoly& g,
                                 const ParamSet& p, const QuadratureConfig& cfg,
                                 long* skipped = nullptr);

// Gram matrix of a family of eigenpolynomials under the torus quadrature.
struct GramResult {
    std::vector<DominantWeight> lams;
    int trunc = 0;
    int grid = 0;
    long total_points = 0;
    long skipped = 0;
    std::vector<std::vector<std::complex<double>>> entries;

    // max_{i != j} |G_ij| / sqrt(G_ii G_jj); 0 for a 1x1 matrix.
    double max_offdiag_normalized() const;
    // max_ij |G_ij - other.G_ij| / (1 + |other.G_ij|), for convergence
    // studies against a finer computation.
    double max_delta(const GramResult& other) const;
};

GramResult gram(const std::vector<KoornwinderPoly>& polys, const QuadratureConfig& cfg);
// Convenience: constructs the eigenpolynomials first.
GramResult gram(const std::vector<DominantWeight>& lams, const ParamSet& p,
                const QuadratureConfig& cfg);

}  // namespace koorn
