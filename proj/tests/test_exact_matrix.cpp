#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koorn/exact_matrix.hpp"

using koorn::ExactMatrix;
using koorn::Rational;

namespace {

ExactMatrix random_invertible(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 6);
    ExactMatrix L(n, n), U(n, n);
    for (int i = 0; i < n; ++i) {
        L.at(i, i) = Rational(1);
        long dnum = num(rng);
        U.at(i, i) = Rational(dnum >= 0 ? dnum + 1 : dnum, den(rng));
        for (int j = 0; j < i; ++j) L.at(i, j) = Rational(num(rng), den(rng));
        for (int j = i + 1; j < n; ++j) U.at(i, j) = Rational(num(rng), den(rng));
    }
    return L * U;
}

}  // namespace

TEST_CASE("identity and known products") {
    ExactMatrix I = ExactMatrix::identity(3);
    CHECK(I.at(0, 0) == Rational(1));
    CHECK(I.at(0, 1) == Rational(0));

    ExactMatrix A(2, 2), B(2, 2);
    A.at(0, 0) = Rational(1); A.at(0, 1) = Rational(2);
    A.at(1, 0) = Rational(3); A.at(1, 1) = Rational(4);
    B.at(0, 0) = Rational(0); B.at(0, 1) = Rational(1);
    B.at(1, 0) = Rational(1, 2); B.at(1, 1) = Rational(-1);
    ExactMatrix C = A * B;
    CHECK(C.at(0, 0) == Rational(1));
    CHECK(C.at(0, 1) == Rational(-1));
    CHECK(C.at(1, 0) == Rational(2));
    CHECK(C.at(1, 1) == Rational(-1));

    CHECK(A * ExactMatrix::identity(2) == A);
    CHECK(ExactMatrix::identity(2) * A == A);
}

TEST_CASE("addition, subtraction, scaling, transpose") {
    ExactMatrix A(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) A.at(i, j) = Rational(i + 1, j + 1);
    CHECK((A + A) == A.scaled(Rational(2)));
    CHECK((A - A).is_zero());
    ExactMatrix T = A.transposed();
    CHECK(T.rows() == 3);
    CHECK(T.cols() == 2);
    CHECK(T.at(2, 1) == A.at(1, 2));
    CHECK(T.transposed() == A);
    CHECK(A.max_abs() == Rational(2));
}

TEST_CASE("is_symmetric and is_zero") {
    ExactMatrix S(2, 2);
    S.at(0, 0) = Rational(1); S.at(0, 1) = Rational(5);
    S.at(1, 0) = Rational(5); S.at(1, 1) = Rational(-2);
    CHECK(S.is_symmetric());
    S.at(1, 0) = Rational(4);
    CHECK_FALSE(S.is_symmetric());
    CHECK(ExactMatrix(3, 3).is_zero());
    CHECK_FALSE(S.is_zero());
}

TEST_CASE("solve_exact against residual oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 8);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 4;
        ExactMatrix A = random_invertible(rng, n);
        std::vector<Rational> b;
        for (int i = 0; i < n; ++i) b.push_back(Rational(num(rng), den(rng)));
        std::vector<Rational> x = koorn::solve_exact(A, b);
        std::vector<Rational> r = A.apply(x);
        for (int i = 0; i < n; ++i) CHECK(r[static_cast<size_t>(i)] == b[static_cast<size_t>(i)]);
    }
}

TEST_CASE("inverse against residual oracle") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + trial % 4;
        ExactMatrix A = random_invertible(rng, n);
        ExactMatrix Ainv = A.inverse();
        CHECK(A * Ainv == ExactMatrix::identity(n));
        CHECK(Ainv * A == ExactMatrix::identity(n));
    }
}

TEST_CASE("singular systems are detected") {
    ExactMatrix A(2, 2);
    A.at(0, 0) = Rational(1); A.at(0, 1) = Rational(2);
    A.at(1, 0) = Rational(2); A.at(1, 1) = Rational(4);
    CHECK_THROWS_AS(A.inverse(), koorn::SingularMatrixError);
    CHECK_THROWS_AS(koorn::solve_exact(A, {Rational(1), Rational(1)}),
                    koorn::SingularMatrixError);
    CHECK_THROWS_AS(ExactMatrix(3, 3).inverse(), koorn::SingularMatrixError);
}

TEST_CASE("shape mismatches are rejected") {
    ExactMatrix A(2, 3), B(2, 2);
    CHECK_THROWS_AS(A + B, koorn::DimensionError);
    CHECK_THROWS_AS(A - B, koorn::DimensionError);
    CHECK_THROWS_AS(A * ExactMatrix(2, 2), koorn::DimensionError);
    CHECK_THROWS_AS(koorn::solve_exact(A, {Rational(1), Rational(1)}),
                    koorn::DimensionError);
    CHECK_THROWS_AS(koorn::solve_exact(B, {Rational(1)}), koorn::DimensionError);
    CHECK_THROWS_AS(A.apply({Rational(1)}), koorn::DimensionError);
    CHECK_THROWS_AS(ExactMatrix(2, 3).inverse(), koorn::DimensionError);
}

TEST_CASE("kronecker product") {
    ExactMatrix I6 = ExactMatrix::identity(2).kron(ExactMatrix::identity(3));
    CHECK(I6 == ExactMatrix::identity(6));

    // Mixed-product property (A (x) B)(C (x) D) = (AC) (x) (BD).
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 5);
    auto rand_mat = [&](int r, int c) {
        ExactMatrix M(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) M.at(i, j) = Rational(num(rng), den(rng));
        return M;
    };
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix A = rand_mat(2, 2), B = rand_mat(3, 3);
        ExactMatrix C = rand_mat(2, 2), D = rand_mat(3, 3);
        CHECK(A.kron(B) * C.kron(D) == (A * C).kron(B * D));
    }

    // Index convention: (i,j) -> i*cols + j.
    ExactMatrix E(2, 2);
    E.at(0, 1) = Rational(1);
    ExactMatrix F(2, 2);
    F.at(1, 0) = Rational(1);
    ExactMatrix K = E.kron(F);
    // (e_0 (x) e_1) component from (x_1 (x) x_0): row (0*2+1)=1, col (1*2+0)=2.
    CHECK(K.at(1, 2) == Rational(1));
    CHECK(K.max_abs() == Rational(1));
}
