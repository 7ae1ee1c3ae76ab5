#pragma once

#include "koorn/params.hpp"
#include "koorn/qdifference.hpp"
#include "koorn/weights.hpp"

namespace koorn {

// A constructed eigenpolynomial: monic on the orbit-sum basis (coefficient
// of m_lambda is 1), supported on weights dominated by lambda, satisfying
// D P = c(lambda) P for the operator with the stored parameters.
struct KoornwinderPoly {
    DominantWeight lam;
    ParamSet params;
    SymmetricPoly coeffs;
};

// Builds the eigenpolynomial for lambda by triangular back-substitution on
// the matrix of D over the dominated-weight basis.  Throws DegeneracyError
// when some dominated weight shares the eigenvalue of lambda (possible only
// at boundary or inadmissible parameters).
KoornwinderPoly koornwinder(const DominantWeight& lam, const ParamSet& p);

// Residual D P - c(lambda) P, recomputed from scratch; identically zero iff
// P is a genuine eigenpolynomial.
SymmetricPoly verify_eigen(const KoornwinderPoly& P);

// Independent construction for rank 1 that shares no code path with
// koornwinder(): the operator coefficients are manipulated as symbolic
// rational functions in a single variable, the matrix of D is read off from
// exact Laurent expansions, and eigenvalues are taken from that matrix's
// own diagonal rather than the closed-form eigenvalue.  Used as an oracle.
KoornwinderPoly one_var_oracle(const DominantWeight& lam, const ParamSet& p);

}  // namespace koorn
