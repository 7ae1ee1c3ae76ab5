#include "koorn/univariate.hpp"

#include <utility>

namespace koorn {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::x_power(int e) {
    if (e < 0) throw DomainError("x_power needs a nonnegative exponent");
    std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
    c.back() = Rational(1);
    return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

const Rational& UniPoly::lead() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> c = c_;
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {UniPoly(), r};
    std::vector<Rational> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Rational f = r.lead() / d.lead();
        q[shift] = f;
        std::vector<Rational> rc = r.c_;
        for (int i = 0; i <= d.degree(); ++i) rc[i + shift] -= f * d.c_[i];
        r = UniPoly(std::move(rc));
    }
    return {UniPoly(std::move(q)), r};
}

Rational UniPoly::eval(const Rational& x) const {
    Rational out(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
    return out;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.lead());
}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

RatFun RatFun::from_poly(UniPoly p) {
    return RatFun(std::move(p), UniPoly::constant(Rational(1)));
}

RatFun RatFun::constant(const Rational& c) {
    return from_poly(UniPoly::constant(c));
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1));
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational lead = den_.lead();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RatFun::den_is_monomial() const {
    for (int i = 0; i < den_.degree(); ++i)
        if (!den_.coeff(i).is_zero()) return false;
    return true;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::scaled(const Rational& c) const {
    return RatFun(num_.scaled(c), den_);
}

}  // namespace koorn
