#include "koorn/reflection.hpp"

namespace koorn {

RMatrix build_R(int n, const Rational& q) {
    if (n < 2) throw DomainError("R-matrix needs n >= 2");
    if (q.is_zero()) throw DomainError("R-matrix needs nonzero q");
    ExactMatrix m(n * n, n * n);
    const Rational qdiff = q - Rational(1) / q;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row = i * n + j;
            m.at(row, row) = (i == j) ? q : Rational(1);
            if (i > j) m.at(row, j * n + i) += qdiff;
        }
    return RMatrix{n, q, std::move(m)};
}

ExactMatrix perm_op(int n) {
    if (n < 1) throw DimensionError("flip operator needs n >= 1");
    ExactMatrix m(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(j * n + i, i * n + j) = Rational(1);
    return m;
}

ExactMatrix r_plus(const RMatrix& R) {
    ExactMatrix P = perm_op(R.n);
    return P * R.entries * P;
}

ExactMatrix r_minus(const RMatrix& R) { return R.entries.inverse(); }

RVariants build_variants(const RMatrix& R) {
    return RVariants{r_plus(R), r_minus(R), perm_op(R.n)};
}

ExactMatrix hecke_residual(const RMatrix& R) {
    const int d = R.n * R.n;
    ExactMatrix pr = perm_op(R.n) * R.entries;
    ExactMatrix id = ExactMatrix::identity(d);
    return (pr - id.scaled(R.q)) * (pr + id.scaled(Rational(1) / R.q));
}

namespace {

// Embeds an n^2 x n^2 two-slot operator into slots (a, b) of the three-fold
// tensor power, 0-based slots, flat index (i0, i1, i2) -> i0*n^2 + i1*n + i2.
ExactMatrix embed3(const ExactMatrix& op, int n, int slot_a, int slot_b) {
    const int d = n * n * n;
    ExactMatrix out(d, d);
    int ri[3], ci[3];
    for (int row = 0; row < d; ++row) {
        ri[0] = row / (n * n);
        ri[1] = (row / n) % n;
        ri[2] = row % n;
        int spectator = 3 - slot_a - slot_b;
        for (int col = 0; col < d; ++col) {
            ci[0] = col / (n * n);
            ci[1] = (col / n) % n;
            ci[2] = col % n;
            if (ri[spectator] != ci[spectator]) continue;
            const Rational& v =
                op.at(ri[slot_a] * n + ri[slot_b], ci[slot_a] * n + ci[slot_b]);
            if (!v.is_zero()) out.at(row, col) = v;
        }
    }
    return out;
}

}  // namespace

ExactMatrix yang_baxter_residual(const RMatrix& R) {
    const int n = R.n;
    ExactMatrix r12 = embed3(R.entries, n, 0, 1);
    ExactMatrix r13 = embed3(R.entries, n, 0, 2);
    ExactMatrix r23 = embed3(R.entries, n, 1, 2);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

ExactMatrix reflection_residual(const ExactMatrix& X, const RMatrix& R) {
    const int n = R.n;
    if (X.rows() != n || X.cols() != n)
        throw DimensionError("reflection residual needs an n x n matrix matching the R-matrix");
    ExactMatrix id = ExactMatrix::identity(n);
    ExactMatrix x1 = X.kron(id);
    ExactMatrix x2 = id.kron(X);
    const ExactMatrix& r12 = R.entries;
    ExactMatrix P = perm_op(n);
    ExactMatrix r21 = P * r12 * P;
    return r12 * x1 * r12.inverse() * x2 - x2 * r21.inverse() * x1 * r21;
}

ExactMatrix build_J(int n, int l, const Rational& s) {
    if (n < 2) throw DomainError("reflection solution needs n >= 2");
    if (l < 1 || 2 * l > n) throw DomainError("reflection solution needs 1 <= l <= n/2");
    if (s.sign() <= 0) throw DomainError("reflection solution needs positive s");
    ExactMatrix m(n, n);
    const Rational one(1);
    for (int k = 1; k <= n; ++k) {
        int kp = n + 1 - k;
        if (k <= l) {
            m.at(k - 1, k - 1) = one - s * s;
            m.at(k - 1, kp - 1) = -s;
            m.at(kp - 1, k - 1) = -s;
        } else if (k < n + 1 - l) {
            m.at(k - 1, k - 1) = one;
        }
    }
    return m;
}

}  // namespace koorn
