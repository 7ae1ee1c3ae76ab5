#include "koorn/rational.hpp"

#include <cctype>
#include <ostream>

namespace koorn {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DomainError("negative power of zero");
        return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-(e + 1)) + 1;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    mpq_class out(num, den);
    out.canonicalize();  // base is canonical, so this only fixes sign of den
    return Rational(out);
}

mpz_class Rational::height() const {
    mpz_class n = ::abs(num());
    return n > den() ? n : den();
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational Rational::parse(const std::string& s) {
    auto fail = [&]() -> Rational {
        throw DomainError("cannot parse rational from \"" + s + "\"");
    };
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) return fail();

    auto is_int = [](const std::string& u) {
        if (u.empty()) return false;
        size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    // GMP's string constructor rejects an explicit leading '+'.
    auto drop_plus = [](const std::string& u) { return u[0] == '+' ? u.substr(1) : u; };

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        std::string p = t.substr(0, slash), q = t.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) return fail();
        p = drop_plus(p);
        q = drop_plus(q);
        mpz_class den(q);
        if (den == 0)
            throw DomainError("rational with zero denominator: \"" + s + "\"");
        mpq_class v(mpz_class(p), den);
        v.canonicalize();
        return Rational(v);
    }

    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip = ip.substr(1);
        if (ip.empty() && fp.empty()) return fail();
        for (char ch : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return fail();
        mpz_class num(ip.empty() ? "0" : ip);
        mpz_class den(1);
        for (char ch : fp) {
            num = num * 10 + (ch - '0');
            den *= 10;
        }
        if (neg) num = -num;
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(v);
    }

    if (!is_int(t)) return fail();
    return Rational(mpq_class(mpz_class(drop_plus(t))));
}

Rational qpoch(const Rational& a, const Rational& q, unsigned n) {
    Rational out(1);
    Rational aq = a;  // a * q^k, updated incrementally
    for (unsigned k = 0; k < n; ++k) {
        out *= Rational(1) - aq;
        aq *= q;
    }
    return out;
}

}  // namespace koorn
