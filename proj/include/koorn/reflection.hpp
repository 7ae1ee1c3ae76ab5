#pragma once

#include "koorn/exact_matrix.hpp"

namespace koorn {

// Standard R-matrix on C^n (x) C^n for generic nonzero q, in the flat
// tensor index convention used project-wide: the basis vector e_i (x) e_j
// sits at position i*n + j (0-based).  Entries:
//   R[(i,j),(i,j)] = q    for i = j,
//   R[(i,j),(i,j)] = 1    for i != j,
//   R[(i,j),(j,i)] += q - 1/q  for i > j.
struct RMatrix {
    int n;
    Rational q;
    ExactMatrix entries;
};

RMatrix build_R(int n, const Rational& q);

// Flip operator P: e_i (x) e_j -> e_j (x) e_i.
ExactMatrix perm_op(int n);

// The two standard companions: R^+ = P R P and R^- = R^{-1}.
ExactMatrix r_plus(const RMatrix& R);
ExactMatrix r_minus(const RMatrix& R);

struct RVariants {
    ExactMatrix rplus;
    ExactMatrix rminus;
    ExactMatrix perm;
};
RVariants build_variants(const RMatrix& R);

// Hecke residual (P R - q)(P R + 1/q); zero for the standard R-matrix.
ExactMatrix hecke_residual(const RMatrix& R);

// Yang-Baxter residual R12 R13 R23 - R23 R13 R12 on C^n (x) C^n (x) C^n.
ExactMatrix yang_baxter_residual(const RMatrix& R);

// Reflection-equation residual for an n x n matrix X:
//   R12 X1 R12^{-1} X2  -  X2 R21^{-1} X1 R21,   R21 = P R12 P,
// with X1 = X (x) I and X2 = I (x) X.  X solves the reflection equation
// iff this vanishes.
ExactMatrix reflection_residual(const ExactMatrix& X, const RMatrix& R);

// One-parameter family of symmetric reflection-equation solutions indexed
// by (n, l, s) with 2l <= n and s nonzero.  With k' = n+1-k (1-based):
// diagonal entries 1-s^2 for k <= l, then 1 for l < k < l', then 0; the
// only off-diagonal entries are -s at (k, k') and (k', k) for k <= l.
ExactMatrix build_J(int n, int l, const Rational& s);

}  // namespace koorn
