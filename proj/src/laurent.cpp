#include "koorn/laurent.hpp"

#include <sstream>

namespace koorn {

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DimensionError("laurent polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly f(nvars);
    f.add_term(Exponent(nvars, 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational& c) {
    LaurentPoly f(static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw DimensionError("exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LaurentPoly::coeff(const Exponent& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw DimensionError("exponent length does not match the variable count");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("laurent polynomials in different numbers of variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out -= o;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly out(nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Rational LaurentPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("evaluation point length does not match variable count");
    for (const auto& x : point)
        if (x.is_zero()) throw DomainError("laurent evaluation at zero coordinate");
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= point[i].pow(e[i]);
        out += term;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print in descending graded-lex order, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            os << "*x" << (i + 1);
            if (it->first[i] != 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

}  // namespace koorn
