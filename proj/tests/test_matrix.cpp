#include <doctest.h>

#include "helpers.hpp"
#include "sbd/matrix.hpp"

using sbd::cd;
using sbd::Matrix;

TEST_CASE("construction validates shape and finiteness") {
  CHECK_THROWS_AS(Matrix(2, 2, {cd(1), cd(2)}), sbd::DimensionMismatch);
  CHECK_THROWS_AS(
      Matrix(1, 2, {cd(1), cd(std::numeric_limits<double>::infinity())}),
      std::invalid_argument);
  const Matrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.max_abs() == 0.0);
}

TEST_CASE("adjoint conjugates and transposes") {
  Matrix m(1, 2, {cd(1, 2), cd(3, -4)});
  const Matrix a = m.adjoint();
  CHECK(a.rows() == 2);
  CHECK(a(0, 0) == cd(1, -2));
  CHECK(a(1, 0) == cd(3, 4));
}

TEST_CASE("product shapes are checked") {
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), sbd::DimensionMismatch);
  sbd::SeededRng rng(1);
  const Matrix a = helpers::random_complex(3, 4, rng);
  const Matrix b = helpers::random_complex(4, 2, rng);
  const Matrix c = a * b;
  // spot-check one entry against the defining sum
  cd expect(0.0);
  for (int k = 0; k < 4; ++k) expect += a(1, k) * b(k, 1);
  CHECK(std::abs(c(1, 1) - expect) < 1e-14);
}

TEST_CASE("kronecker product layout") {
  Matrix a(2, 2, {cd(1), cd(2), cd(3), cd(4)});
  const Matrix eye = Matrix::identity(2);
  const Matrix k = kronecker(a, eye);
  CHECK(k.rows() == 4);
  CHECK(k(0, 0) == cd(1));
  CHECK(k(0, 2) == cd(2));
  CHECK(k(1, 3) == cd(2));
  CHECK(k(2, 0) == cd(3));
  CHECK(k(3, 3) == cd(4));
  CHECK(k(0, 1) == cd(0));
}

TEST_CASE("hcat and vcat compose blocks") {
  const Matrix a = Matrix::identity(2);
  const Matrix empty(2, 0);
  CHECK(hcat(empty, a).cols() == 2);
  CHECK(hcat(a, a).cols() == 4);
  CHECK(vcat(a, a).rows() == 4);
  CHECK_THROWS_AS(hcat(a, Matrix(3, 1)), sbd::DimensionMismatch);
}
