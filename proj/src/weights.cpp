#include "koorn/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace koorn {

DominantWeight::DominantWeight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DimensionError("dominant weight needs at least one part");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw DomainError("dominant weight parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("dominant weight parts must be weakly decreasing");
    }
}

DominantWeight DominantWeight::zero(int l) { return DominantWeight(std::vector<int>(l, 0)); }

int DominantWeight::norm() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool DominantWeight::operator<(const DominantWeight& o) const {
    if (length() != o.length())
        throw DimensionError("comparing dominant weights of different lengths");
    return GradedLexLess{}(parts_, o.parts_);
}

std::string DominantWeight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

bool dominance_leq(const DominantWeight& mu, const DominantWeight& lam) {
    if (mu.length() != lam.length())
        throw DimensionError("dominance comparison needs equal weight lengths");
    int smu = 0, slam = 0;
    for (int i = 0; i < mu.length(); ++i) {
        smu += mu.parts()[i];
        slam += lam.parts()[i];
        if (smu > slam) return false;
    }
    return true;
}

std::vector<DominantWeight> weights_below(const DominantWeight& lam) {
    const int l = lam.length();
    // Partial sums of lambda bound the partial sums of any mu <= lambda.
    std::vector<int> psum(l);
    std::partial_sum(lam.parts().begin(), lam.parts().end(), psum.begin());

    std::vector<DominantWeight> out;
    std::vector<int> cur(l);
    // Depth-first over weakly decreasing prefixes, pruning as soon as a
    // partial sum exceeds the bound.
    std::function<void(int, int, int)> rec = [&](int pos, int prev, int acc) {
        if (pos == l) {
            out.emplace_back(cur);
            return;
        }
        int hi = std::min(prev, psum[pos] - acc);
        for (int v = hi; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, v, acc + v);
        }
    };
    rec(0, lam.parts()[0], 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponent> weyl_orbit(const DominantWeight& lam) {
    std::vector<int> base = lam.parts();
    std::sort(base.begin(), base.end());
    std::vector<Exponent> out;
    // All permutations of the multiset of parts, then all sign patterns on
    // the nonzero entries; duplicates impossible by construction of the
    // sign loop, but a final sort+unique keeps this robust and canonical.
    do {
        std::vector<int> nz;
        for (size_t i = 0; i < base.size(); ++i)
            if (base[i] != 0) nz.push_back(static_cast<int>(i));
        const size_t npat = size_t{1} << nz.size();
        for (size_t pat = 0; pat < npat; ++pat) {
            Exponent e = base;
            for (size_t b = 0; b < nz.size(); ++b)
                if (pat & (size_t{1} << b)) e[nz[b]] = -e[nz[b]];
            out.push_back(std::move(e));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end(), GradedLexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LaurentPoly orbit_sum(const DominantWeight& lam) {
    LaurentPoly f(lam.length());
    for (const auto& e : weyl_orbit(lam)) f.add_term(e, Rational(1));
    return f;
}

bool is_W_invariant(const LaurentPoly& f) {
    const int l = f.nvars();
    // Invariance under the generators suffices: adjacent transpositions and
    // the sign flip of the last variable.
    auto coeff_of = [&](const Exponent& e) { return f.coeff(e); };
    for (const auto& [e, c] : f.terms()) {
        for (int k = 0; k + 1 < l; ++k) {
            Exponent s = e;
            std::swap(s[k], s[k + 1]);
            if (coeff_of(s) != c) return false;
        }
        Exponent s = e;
        s[l - 1] = -s[l - 1];
        if (coeff_of(s) != c) return false;
    }
    return true;
}

SymmetricPoly::SymmetricPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DimensionError("symmetric polynomial needs at least one variable");
}

SymmetricPoly SymmetricPoly::monomial(const DominantWeight& mu, const Rational& c) {
    SymmetricPoly f(mu.length());
    f.add_term(mu, c);
    return f;
}

SymmetricPoly SymmetricPoly::one(int nvars) {
    return monomial(DominantWeight::zero(nvars), Rational(1));
}

void SymmetricPoly::add_term(const DominantWeight& mu, const Rational& c) {
    if (mu.length() != nvars_)
        throw DimensionError("weight length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Rational SymmetricPoly::coeff(const DominantWeight& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

SymmetricPoly SymmetricPoly::operator+(const SymmetricPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("symmetric polynomials in different numbers of variables");
    SymmetricPoly out = *this;
    for (const auto& [mu, c] : o.coeffs_) out.add_term(mu, c);
    return out;
}

SymmetricPoly SymmetricPoly::operator-(const SymmetricPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("symmetric polynomials in different numbers of variables");
    SymmetricPoly out = *this;
    for (const auto& [mu, c] : o.coeffs_) out.add_term(mu, -c);
    return out;
}

SymmetricPoly SymmetricPoly::scaled(const Rational& c) const {
    SymmetricPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mu, coef] : coeffs_) out.coeffs_.emplace(mu, coef * c);
    return out;
}

LaurentPoly SymmetricPoly::expand() const {
    LaurentPoly out(nvars_);
    for (const auto& [mu, c] : coeffs_) out += orbit_sum(mu).scaled(c);
    return out;
}

std::string SymmetricPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second << ")*m" << it->first.str();
    }
    return os.str();
}

SymmetricPoly to_orbit_basis(const LaurentPoly& f) {
    if (!is_W_invariant(f))
        throw InvarianceError("polynomial is not invariant under signed permutations");
    SymmetricPoly out(f.nvars());
    LaurentPoly rest = f;
    while (!rest.is_zero()) {
        // The graded-lex-greatest exponent of an invariant polynomial is the
        // dominant representative of its orbit, so peeling terminates.
        const auto& [e, c] = *rest.terms().rbegin();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || (i > 0 && e[i] > e[i - 1]))
                throw InvarianceError("leading exponent is not dominant");
        DominantWeight mu{Exponent(e)};
        Rational coef = c;
        out.add_term(mu, coef);
        rest -= orbit_sum(mu).scaled(coef);
    }
    return out;
}

}  // namespace koorn
