#include "koorn/torus.hpp"

#include <cmath>
#include <numbers>

namespace koorn {

namespace {

constexpr double kDegenerateEps = 1e-12;

// Grid resolution must give the torus a few points per dimension; the
// truncation may be zero (every q-shifted factorial becomes an empty
// product), which is the convention used by exactness tests.
void check_config(const QuadratureConfig& cfg) {
    if (cfg.grid < 4) throw DomainError("quadrature needs grid >= 4");
    if (cfg.trunc < 0) throw DomainError("quadrature needs trunc >= 0");
}

// Pairwise (tree) summation: deterministic for a fixed input order and far
// less drift than naive accumulation on long grids.
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& v, size_t lo, size_t hi) {
    if (hi == lo) return {0.0, 0.0};
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Denominator-side truncated factorial: every factor is checked against
// numerical zero before dividing.
std::complex<double> qpoch_den(std::complex<double> z, double q, int trunc) {
    std::complex<double> out{1.0, 0.0};
    double qk = 1.0;
    for (int k = 0; k < trunc; ++k) {
        std::complex<double> factor = 1.0 - z * qk;
        if (std::abs(factor) < kDegenerateEps)
            throw DegeneratePointError("truncated weight denominator vanishes at grid point");
        out *= factor;
        qk *= q;
    }
    return out;
}

}  // namespace

NumericParams NumericParams::from(const ParamSet& p) {
    if (!p.orthogonality_grade())
        throw ParamError(
            "torus quadrature needs |a|, |b|, |c|, |d| < 1 in addition to the base condition");
    return NumericParams{p.q.to_double(), p.t.to_double(), p.a.to_double(),
                         p.b.to_double(), p.c.to_double(), p.d.to_double()};
}

std::complex<double> cpow_int(std::complex<double> z, int e) {
    if (e < 0) return 1.0 / cpow_int(z, -e);
    std::complex<double> out{1.0, 0.0};
    std::complex<double> base = z;
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

std::complex<double> eval_complex(const LaurentPoly& f,
                                  const std::vector<std::complex<double>>& x) {
    if (static_cast<int>(x.size()) != f.nvars())
        throw DimensionError("complex evaluation point length does not match variable count");
    std::complex<double> out{0.0, 0.0};
    for (const auto& [e, c] : f.terms()) {
        std::complex<double> term{c.to_double(), 0.0};
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= cpow_int(x[i], e[i]);
        out += term;
    }
    return out;
}

std::complex<double> qpoch_complex(std::complex<double> z, double q, int trunc) {
    std::complex<double> out{1.0, 0.0};
    double qk = 1.0;
    for (int k = 0; k < trunc; ++k) {
        out *= 1.0 - z * qk;
        qk *= q;
    }
    return out;
}

std::complex<double> weight_plus(const std::vector<std::complex<double>>& x,
                                 const NumericParams& p, int trunc) {
    const int l = static_cast<int>(x.size());
    std::complex<double> num{1.0, 0.0}, den{1.0, 0.0};
    for (int i = 0; i < l; ++i) {
        num *= qpoch_complex(x[i] * x[i], p.q, trunc);
        den *= qpoch_den(p.a * x[i], p.q, trunc);
        den *= qpoch_den(p.b * x[i], p.q, trunc);
        den *= qpoch_den(p.c * x[i], p.q, trunc);
        den *= qpoch_den(p.d * x[i], p.q, trunc);
    }
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            num *= qpoch_complex(x[i] * x[j], p.q, trunc);
            num *= qpoch_complex(x[i] / x[j], p.q, trunc);
            den *= qpoch_den(p.t * x[i] * x[j], p.q, trunc);
            den *= qpoch_den(p.t * x[i] / x[j], p.q, trunc);
        }
    return num / den;
}

std::complex<double> weight(const std::vector<std::complex<double>>& x, const NumericParams& p,
                            int trunc) {
    std::vector<std::complex<double>> xinv(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == std::complex<double>{0.0, 0.0})
            throw DomainError("weight evaluated at zero coordinate");
        xinv[i] = 1.0 / x[i];
    }
    return weight_plus(x, p, trunc) * weight_plus(xinv, p, trunc);
}

namespace {

// Shared grid walk: calls visit(x, xinv) for every grid point, where x runs
// over all l-tuples of grid-th roots of unity; returns the number of
// degenerate points that were skipped.  The weight value is passed along so
// it is computed exactly once per point.
template <typename Visit>
long walk_grid(int l, const NumericParams& np, const QuadratureConfig& cfg, Visit visit) {
    const int M = cfg.grid;
    std::vector<std::complex<double>> root(M);
    for (int j = 0; j < M; ++j) {
        double theta = 2.0 * std::numbers::pi * j / M;
        root[j] = std::polar(1.0, theta);
    }
    std::vector<int> idx(l, 0);
    std::vector<std::complex<double>> x(l), xinv(l);
    long skipped = 0;
    while (true) {
        for (int i = 0; i < l; ++i) {
            x[i] = root[idx[i]];
            xinv[i] = 1.0 / x[i];
        }
        try {
            std::complex<double> w = weight_plus(x, np, cfg.trunc) * weight_plus(xinv, np, cfg.trunc);
            visit(x, xinv, w);
        } catch (const DegeneratePointError&) {
            ++skipped;
        }
        int pos = l - 1;
        while (pos >= 0 && ++idx[pos] == M) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return skipped;
}

}  // namespace

std::complex<double> torus_inner(const SymmetricPoly& f, const SymmetricPoly& g,
                                 const ParamSet& p, const QuadratureConfig& cfg, long* skipped) {
    if (f.nvars() != g.nvars())
        throw DimensionError("inner product of polynomials in different numbers of variables");
    check_config(cfg);
    const int l = f.nvars();
    const NumericParams np = NumericParams::from(p);
    const LaurentPoly fe = f.expand();
    const LaurentPoly ge = g.expand();

    std::vector<std::complex<double>> contrib;
    long skip = walk_grid(l, np, cfg,
                          [&](const std::vector<std::complex<double>>& x,
                              const std::vector<std::complex<double>>& xinv,
                              std::complex<double> w) {
                              contrib.push_back(eval_complex(fe, x) * eval_complex(ge, xinv) * w);
                          });
    if (skipped) *skipped = skip;
    long total = 1;
    for (int i = 0; i < l; ++i) total *= cfg.grid;
    if (contrib.empty()) throw InsufficientDataError("every grid point was degenerate");
    return pairwise_sum(contrib, 0, contrib.size()) / static_cast<double>(total - skip);
}

double GramResult::max_offdiag_normalized() const {
    double out = 0.0;
    const size_t n = entries.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double scale = std::sqrt(std::abs(entries[i][i]) * std::abs(entries[j][j]));
            if (scale == 0.0) continue;
            out = std::max(out, std::abs(entries[i][j]) / scale);
        }
    return out;
}

double GramResult::max_delta(const GramResult& other) const {
    if (entries.size() != other.entries.size())
        throw DimensionError("comparing gram matrices of different sizes");
    double out = 0.0;
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = 0; j < entries.size(); ++j)
            out = std::max(out, std::abs(entries[i][j] - other.entries[i][j]) /
                                    (1.0 + std::abs(other.entries[i][j])));
    return out;
}

GramResult gram(const std::vector<KoornwinderPoly>& polys, const QuadratureConfig& cfg) {
    if (polys.empty()) throw InsufficientDataError("gram needs at least one polynomial");
    check_config(cfg);
    const int l = polys.front().coeffs.nvars();
    for (const auto& P : polys) {
        if (P.coeffs.nvars() != l)
            throw DimensionError("gram needs polynomials in a common number of variables");
        if (!(P.params == polys.front().params))
            throw ParamError("gram needs polynomials sharing one parameter tuple");
    }
    const NumericParams np = NumericParams::from(polys.front().params);
    const size_t n = polys.size();

    std::vector<LaurentPoly> expanded;
    expanded.reserve(n);
    for (const auto& P : polys) expanded.push_back(P.coeffs.expand());

    // One pass over the grid: record P_i(x), P_i(x^{-1}) and the weight.
    std::vector<std::vector<std::complex<double>>> vals(n), vals_inv(n);
    std::vector<std::complex<double>> wvals;
    long skip = walk_grid(l, np, cfg,
                          [&](const std::vector<std::complex<double>>& x,
                              const std::vector<std::complex<double>>& xinv,
                              std::complex<double> w) {
                              for (size_t i = 0; i < n; ++i) {
                                  vals[i].push_back(eval_complex(expanded[i], x));
                                  vals_inv[i].push_back(eval_complex(expanded[i], xinv));
                              }
                              wvals.push_back(w);
                          });

    GramResult out;
    for (const auto& P : polys) out.lams.push_back(P.lam);
    out.trunc = cfg.trunc;
    out.grid = cfg.grid;
    out.total_points = 1;
    for (int i = 0; i < l; ++i) out.total_points *= cfg.grid;
    out.skipped = skip;
    if (wvals.empty()) throw InsufficientDataError("every grid point was degenerate");

    const double norm = static_cast<double>(out.total_points - skip);
    out.entries.assign(n, std::vector<std::complex<double>>(n, {0.0, 0.0}));
    std::vector<std::complex<double>> contrib(wvals.size());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < wvals.size(); ++k)
                contrib[k] = vals[i][k] * vals_inv[j][k] * wvals[k];
            out.entries[i][j] = pairwise_sum(contrib, 0, contrib.size()) / norm;
        }
    return out;
}

GramResult gram(const std::vector<DominantWeight>& lams, const ParamSet& p,
                const QuadratureConfig& cfg) {
    std::vector<KoornwinderPoly> polys;
    polys.reserve(lams.size());
    for (const auto& lam : lams) polys.push_back(koornwinder(lam, p));
    return gram(polys, cfg);
}

}  // namespace koorn
