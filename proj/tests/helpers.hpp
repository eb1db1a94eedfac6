#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sbd/linalg.hpp"
#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace helpers {

using sbd::cd;
using sbd::Matrix;

inline Matrix random_complex(int rows, int cols, sbd::SeededRng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = cd(rng.symmetric(), rng.symmetric());
  return m;
}

inline Matrix random_unitary(int n, sbd::SeededRng& rng) {
  return sbd::invertible_to_unitary(random_complex(n, n, rng) +
                                        cd(2.0, 0.0) * Matrix::identity(n),
                                    sbd::Tolerances{});
}

// U diag(sigma) V^H with sigma spread so the condition number is <= cond.
inline Matrix random_invertible(int n, double cond, sbd::SeededRng& rng) {
  const Matrix u = random_unitary(n, rng);
  const Matrix v = random_unitary(n, rng);
  Matrix d(n, n);
  const double half = std::sqrt(cond);
  for (int i = 0; i < n; ++i) {
    const double e = rng.symmetric();  // [-1, 1)
    d(i, i) = cd(std::pow(half, e), 0.0);
  }
  return u * (d * v.adjoint());
}

inline double span_distance(const sbd::Subspace& a, const sbd::Subspace& b) {
  const Matrix pa = a.basis * a.basis.adjoint();
  const Matrix pb = b.basis * b.basis.adjoint();
  return (pa - pb).max_abs();
}

inline bool span_contains(const sbd::Subspace& s, const Matrix& v,
                          double tol) {
  const Matrix proj = s.basis * (s.basis.adjoint() * v);
  return (v - proj).max_abs() <= tol * std::max(1.0, v.max_abs());
}

inline double orthonormality_error(const Matrix& b) {
  if (b.cols() == 0) return 0.0;
  return (b.adjoint() * b - Matrix::identity(b.cols())).max_abs();
}

inline bool same_multiset(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Compares a matrix spectrum against expected values (with multiplicity).
inline bool eigenvalues_close(const Matrix& m, std::vector<cd> expected,
                              double tol) {
  std::vector<cd> actual = sbd::eigenvalues(m);
  auto lex = [](const cd& x, const cd& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  };
  std::sort(expected.begin(), expected.end(), lex);
  if (actual.size() != expected.size()) return false;
  for (size_t i = 0; i < actual.size(); ++i)
    if (std::abs(actual[i] - expected[i]) > tol) return false;
  return true;
}

// Independent rank computation by Gaussian elimination with partial
// pivoting; the oracle for null-space dimensions.
inline int gauss_rank(Matrix m, double rel_tol) {
  const int rows = m.rows(), cols = m.cols();
  double scale = m.max_abs();
  if (scale == 0.0) return 0;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    double best = rel_tol * scale;
    for (int i = row; i < rows; ++i) {
      if (std::abs(m(i, col)) > best) {
        best = std::abs(m(i, col));
        piv = i;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j) std::swap(m(row, j), m(piv, j));
    for (int i = row + 1; i < rows; ++i) {
      const cd f = m(i, col) / m(row, col);
      for (int j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

inline int gauss_nullity(const Matrix& m, double rel_tol) {
  return m.cols() - gauss_rank(m, rel_tol);
}

}  // namespace helpers
