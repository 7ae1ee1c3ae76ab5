#include "koorn/exact_matrix.hpp"

#include <utility>

namespace koorn {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    ExactMatrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
    ExactMatrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
    ExactMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rational ExactMatrix::max_abs() const {
    Rational m(0);
    for (const auto& x : a_) {
        Rational ax = x.abs();
        if (ax > m) m = ax;
    }
    return m;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    ExactMatrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rational& c = at(i, j);
            if (c.is_zero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q) {
                    const Rational& d = o.at(p, q);
                    if (!d.is_zero()) out.at(i * o.rows_ + p, j * o.cols_ + q) = c * d;
                }
        }
    return out;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("vector length mismatch in apply");
    std::vector<Rational> out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Row index of the nonzero entry with minimal height in column `col` at or
// below row `row`, or -1 when the entire candidate range is zero.
int pick_pivot(const ExactMatrix& m, int row, int col) {
    int best = -1;
    mpz_class best_h;
    for (int i = row; i < m.rows(); ++i) {
        if (m.at(i, col).is_zero()) continue;
        mpz_class h = m.at(i, col).height();
        if (best < 0 || h < best_h) {
            best = i;
            best_h = h;
        }
    }
    return best;
}

}  // namespace

std::vector<Rational> solve_exact(const ExactMatrix& A, const std::vector<Rational>& b) {
    if (A.rows() != A.cols()) throw DimensionError("solve_exact needs a square matrix");
    if (static_cast<int>(b.size()) != A.rows())
        throw DimensionError("solve_exact right-hand side length mismatch");
    const int n = A.rows();
    ExactMatrix m = A;
    std::vector<Rational> rhs = b;

    for (int col = 0; col < n; ++col) {
        int piv = pick_pivot(m, col, col);
        if (piv < 0) throw SingularMatrixError("singular matrix in solve_exact");
        if (piv != col) {
            for (int j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            std::swap(rhs[piv], rhs[col]);
        }
        const Rational p = m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col) / p;
            m.at(i, col) = Rational(0);
            for (int j = col + 1; j < n; ++j)
                if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
            rhs[i] -= f * rhs[col];
        }
    }

    std::vector<Rational> x(n, Rational(0));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc = rhs[i];
        for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero()) acc -= m.at(i, j) * x[j];
        x[i] = acc / m.at(i, i);
    }
    return x;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse needs a square matrix");
    const int n = rows_;
    ExactMatrix m = *this;
    ExactMatrix inv = identity(n);

    for (int col = 0; col < n; ++col) {
        int piv = pick_pivot(m, col, col);
        if (piv < 0) throw SingularMatrixError("singular matrix in inverse");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const Rational p = m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
                if (!inv.at(col, j).is_zero()) inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace koorn
