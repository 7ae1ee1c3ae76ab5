#pragma once

#include <vector>

#include "koorn/rational.hpp"

namespace koorn {

// Dense univariate polynomial over the rationals, coefficients ascending
// by degree, no trailing zeros.  Only what the one-variable symbolic oracle
// needs: ring operations, division with remainder, and monic gcd.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly x_power(int e);  // x^e, e >= 0

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    Rational eval(const Rational& x) const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Monic greatest common divisor (1 for coprime inputs, 0 only for two zero
// inputs).
UniPoly poly_gcd(UniPoly a, UniPoly b);

// Rational function num/den in one variable, kept fully cancelled with a
// monic denominator, so equal functions have equal representations.
class RatFun {
  public:
    RatFun() : num_(), den_(UniPoly::constant(Rational(1))) {}
    RatFun(UniPoly num, UniPoly den);
    static RatFun from_poly(UniPoly p);
    static RatFun constant(const Rational& c);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // True when the denominator is a pure monomial x^e; such functions are
    // Laurent polynomials.
    bool den_is_monomial() const;

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun scaled(const Rational& c) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  private:
    void normalize();
    UniPoly num_, den_;
};

}  // namespace koorn
