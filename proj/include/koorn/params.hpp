#pragma once

#include <string>

#include "koorn/rational.hpp"

namespace koorn {

// Parameter tuple (q, t; a, b, c, d) for the rank-l operator family.
// Construction enforces admissibility:
//   0 < q < 1,   0 < t < 1,   -q <= abcd < 1.
// The boundary case abcd = -q is admissible but flagged, since eigenvalue
// separation is no longer backed by the interior theory there.
struct ParamSet {
    Rational q, t, a, b, c, d;

    ParamSet(Rational q, Rational t, Rational a, Rational b, Rational c, Rational d);

    // Escape hatch for studying degenerate regimes: skips the admissibility
    // check entirely.  Anything downstream may throw on such parameters.
    static ParamSet unchecked(Rational q, Rational t, Rational a, Rational b, Rational c,
                              Rational d);

    Rational abcd() const { return a * b * c * d; }
    bool is_boundary() const { return abcd() == -q; }

    // Stricter grade needed for torus orthogonality: additionally
    // |a|, |b|, |c|, |d| < 1 (all parameters are rationals, hence real).
    bool orthogonality_grade() const;

    // Stable textual key "q=1/2;t=1/3;a=...;b=...;c=...;d=..." used for
    // cache identity.
    std::string canonical_key() const;

    bool operator==(const ParamSet& o) const;

  private:
    struct Unchecked {};
    ParamSet(Unchecked, Rational q, Rational t, Rational a, Rational b, Rational c, Rational d);
};

}  // namespace koorn
