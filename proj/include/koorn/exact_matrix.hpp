#pragma once

#include <vector>

#include "koorn/rational.hpp"

namespace koorn {

// Dense matrix of rationals.  All arithmetic is exact; sizes stay small
// (interpolation systems and tensor-space matrices), so a straightforward
// dense representation is the right tool.
class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols);
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const Rational& c) const;
    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_symmetric() const;
    Rational max_abs() const;

    // Kronecker (tensor) product; index convention (i,j) -> i*cols + j.
    ExactMatrix kron(const ExactMatrix& o) const;

    // Gauss-Jordan inverse; throws SingularMatrixError when rank-deficient.
    ExactMatrix inverse() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Solves A x = b exactly by fraction-aware Gaussian elimination.  The pivot
// in each column is the nonzero candidate of minimal height, which keeps
// intermediate numerators and denominators from blowing up on the random
// interpolation systems this is used for.  Throws SingularMatrixError when
// A is not invertible and DimensionError on shape mismatch.
std::vector<Rational> solve_exact(const ExactMatrix& A, const std::vector<Rational>& b);

}  // namespace koorn
