#pragma once

#include <map>
#include <string>
#include <vector>

#include "koorn/laurent.hpp"

namespace koorn {

// Dominant weight for the rank-l hyperoctahedral situation: a weakly
// decreasing vector of nonnegative integers (a partition with exactly l
// parts, zeros included).
class DominantWeight {
  public:
    explicit DominantWeight(std::vector<int> parts);
    static DominantWeight zero(int l);

    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int norm() const;  // |lambda|, the sum of the parts
    bool is_zero() const { return parts_.front() == 0; }

    bool operator==(const DominantWeight& o) const { return parts_ == o.parts_; }
    bool operator!=(const DominantWeight& o) const { return parts_ != o.parts_; }
    // Graded-lex, matching the term order on Laurent exponents.
    bool operator<(const DominantWeight& o) const;

    std::string str() const;  // "(2,1,0)"

  private:
    std::vector<int> parts_;
};

// Dominance (partial) order: mu <= lambda iff every partial sum of mu is
// bounded by the corresponding partial sum of lambda.  Both weights must
// have the same length.
bool dominance_leq(const DominantWeight& mu, const DominantWeight& lam);

// All dominant weights mu <= lambda in dominance order, sorted graded-lex
// ascending.  This is the monomial support of the associated polynomial.
std::vector<DominantWeight> weights_below(const DominantWeight& lam);

// Orbit of lambda under signed permutations (the hyperoctahedral group W):
// all distinct vectors obtained by permuting entries and flipping signs.
// Deterministically sorted (graded-lex ascending).
std::vector<Exponent> weyl_orbit(const DominantWeight& lam);

// Monomial orbit sum m_lambda = sum over the W-orbit of x^mu, coefficient 1
// on each distinct monomial.
LaurentPoly orbit_sum(const DominantWeight& lam);

// Whether a Laurent polynomial is invariant under all signed permutations
// of the variables.
bool is_W_invariant(const LaurentPoly& f);

// W-invariant polynomial stored on the orbit-sum basis {m_mu}.  The basis
// representation is unique, so equality of coefficient maps is equality of
// polynomials.
class SymmetricPoly {
  public:
    using CoeffMap = std::map<DominantWeight, Rational>;

    explicit SymmetricPoly(int nvars);
    static SymmetricPoly monomial(const DominantWeight& mu, const Rational& c);
    static SymmetricPoly one(int nvars);

    int nvars() const { return nvars_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const DominantWeight& mu, const Rational& c);
    Rational coeff(const DominantWeight& mu) const;

    SymmetricPoly operator+(const SymmetricPoly& o) const;
    SymmetricPoly operator-(const SymmetricPoly& o) const;
    SymmetricPoly scaled(const Rational& c) const;

    bool operator==(const SymmetricPoly& o) const {
        return nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const SymmetricPoly& o) const { return !(*this == o); }

    // Expansion into the monomial (Laurent) representation.
    LaurentPoly expand() const;

    // Convenience evaluation via expand(); hot paths should expand once.
    Rational eval(const std::vector<Rational>& point) const { return expand().eval(point); }

    std::string str() const;

  private:
    int nvars_;
    CoeffMap coeffs_;
};

// Rewrites a W-invariant Laurent polynomial on the orbit-sum basis by
// peeling leading terms.  Throws InvarianceError when f is not invariant.
SymmetricPoly to_orbit_basis(const LaurentPoly& f);

}  // namespace koorn
