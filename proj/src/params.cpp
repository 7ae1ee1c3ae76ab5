#include "koorn/params.hpp"

#include <sstream>

namespace koorn {

ParamSet::ParamSet(Rational q_, Rational t_, Rational a_, Rational b_, Rational c_, Rational d_)
    : q(std::move(q_)), t(std::move(t_)), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
      d(std::move(d_)) {
    if (!(Rational(0) < q && q < Rational(1)))
        throw ParamError("parameter condition violated: 0 < q < 1 (got q = " + q.str() + ")");
    if (!(Rational(0) < t && t < Rational(1)))
        throw ParamError("parameter condition violated: 0 < t < 1 (got t = " + t.str() + ")");
    Rational p = abcd();
    if (!(-q <= p && p < Rational(1)))
        throw ParamError("parameter condition violated: -q <= abcd < 1 (got abcd = " + p.str() +
                         ", q = " + q.str() + ")");
}

ParamSet::ParamSet(Unchecked, Rational q_, Rational t_, Rational a_, Rational b_, Rational c_,
                   Rational d_)
    : q(std::move(q_)), t(std::move(t_)), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)),
      d(std::move(d_)) {}

ParamSet ParamSet::unchecked(Rational q, Rational t, Rational a, Rational b, Rational c,
                             Rational d) {
    return ParamSet(Unchecked{}, std::move(q), std::move(t), std::move(a), std::move(b),
                    std::move(c), std::move(d));
}

bool ParamSet::orthogonality_grade() const {
    const Rational one(1);
    return a.abs() < one && b.abs() < one && c.abs() < one && d.abs() < one;
}

std::string ParamSet::canonical_key() const {
    std::ostringstream os;
    os << "q=" << q << ";t=" << t << ";a=" << a << ";b=" << b << ";c=" << c << ";d=" << d;
    return os.str();
}

bool ParamSet::operator==(const ParamSet& o) const {
    return q == o.q && t == o.t && a == o.a && b == o.b && c == o.c && d == o.d;
}

}  // namespace koorn
