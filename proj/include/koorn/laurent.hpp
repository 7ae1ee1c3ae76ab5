#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "koorn/rational.hpp"

namespace koorn {

// Exponent vector of a Laurent monomial x_1^{e_1} ... x_l^{e_l}.
using Exponent = std::vector<int>;

// Graded lexicographic order: first by total degree (sum of entries, which
// may be negative for Laurent exponents), then lexicographically.  This is
// the canonical term order used everywhere: map iteration, serialization,
// and the triangular solver all agree on it.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        long ga = std::accumulate(a.begin(), a.end(), 0L);
        long gb = std::accumulate(b.begin(), b.end(), 0L);
        if (ga != gb) return ga < gb;
        return a < b;
    }
};

// Sparse Laurent polynomial in l variables over the rationals.  Terms with
// zero coefficient are never stored, so operator== on the term maps is
// genuine polynomial equality.
class LaurentPoly {
  public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    explicit LaurentPoly(int nvars);

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(Exponent e, const Rational& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * x^e, cancelling the term if the sum vanishes.
    void add_term(const Exponent& e, const Rational& c);

    Rational coeff(const Exponent& e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact evaluation.  Every coordinate must be nonzero since negative
    // exponents occur; a zero coordinate is a domain error even when the
    // polynomial happens to have no negative exponent in that variable.
    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

  private:
    void check_same_vars(const LaurentPoly& o) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace koorn
