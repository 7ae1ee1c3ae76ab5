#pragma once

#include "koorn/exact_matrix.hpp"
#include "koorn/params.hpp"
#include "koorn/weights.hpp"

namespace koorn {

// Rational coefficient functions of the second-order q-difference operator.
// phi_plus_at is the coefficient of the forward shift x_k -> q x_k,
// phi_minus_at of the backward shift x_k -> x_k / q (k is 0-based).  Both
// throw PoleError when the evaluation point lies on a zero of their
// denominator.
Rational phi_plus_at(int k, const std::vector<Rational>& x, const ParamSet& p);
Rational phi_minus_at(int k, const std::vector<Rational>& x, const ParamSet& p);

// Pointwise evaluation of (D f)(x) from the defining expression
//   sum_k [ phi^+_k(x) (f(..., q x_k, ...) - f(x))
//         + phi^-_k(x) (f(..., x_k / q, ...) - f(x)) ].
Rational eval_D_at(const LaurentPoly& f, const std::vector<Rational>& x, const ParamSet& p);

// Eigenvalue of D on the polynomial labelled by lambda:
//   sum_{k=1}^{l} ( abcd q^{-1} t^{2l-k-1} (q^{lambda_k} - 1)
//                 + t^{k-1} (q^{-lambda_k} - 1) ).
Rational eigenvalue_c(const DominantWeight& lam, const ParamSet& p);

// Image of a W-invariant polynomial under D, exactly, on the orbit-sum
// basis.  Works by evaluation and interpolation: D preserves the span of
// {m_nu : nu <= mu in dominance} for every mu in the support of f, so the
// image is pinned down by exact values at finitely many generic rational
// points.  Sample points are drawn deterministically; configurations that
// hit a coefficient pole or a singular interpolation system are redrawn
// (InterpolationError after 20 attempts).  Two held-out evaluation points
// must reproduce exactly, otherwise InternalError.
SymmetricPoly apply_D(const SymmetricPoly& f, const ParamSet& p);

// Matrix of D restricted to span{m_nu : nu <= lambda}, basis sorted
// graded-lex ascending.  entries.at(i, j) is the coefficient of
// m_{basis[i]} in D m_{basis[j]}.
struct OperatorMatrix {
    std::vector<DominantWeight> basis;
    ExactMatrix entries;
};
OperatorMatrix operator_matrix(const DominantWeight& lam, const ParamSet& p);

}  // namespace koorn
