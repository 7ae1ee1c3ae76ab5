#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "koorn/errors.hpp"

namespace koorn {

// Arbitrary-precision rational scalar.  Thin wrapper over GMP's mpq_class
// that pins down the invariants the rest of the library relies on: values
// are always in lowest terms with positive denominator, zero is 0/1, and
// every operation is exact or throws.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, ints are rationals
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "p/q", an integer, or a finite decimal such as "-0.125".
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    // Integer power; e may be negative, in which case *this must be nonzero.
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // max(|numerator|, denominator): the usual height, used to pick small
    // pivots during exact elimination so intermediate entries stay modest.
    mpz_class height() const;

    double to_double() const { return v_.get_d(); }

    // Canonical form "p/q" (denominator always printed, so "3" is "3/1").
    std::string str() const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// q-shifted factorial (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k), with the
// empty-product convention (a; q)_0 = 1.
Rational qpoch(const Rational& a, const Rational& q, unsigned n);

}  // namespace koorn
