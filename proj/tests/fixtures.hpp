#pragma once

// Hand-checked matrix families with known simultaneous block structure, used
// as golden cases across the test suites.

#include <vector>

#include "sbd/matrix.hpp"

namespace fixtures {

using sbd::cd;
using sbd::Matrix;

inline Matrix real_mat(int n, std::initializer_list<double> vals) {
  std::vector<cd> entries;
  entries.reserve(vals.size());
  for (double v : vals) entries.emplace_back(v, 0.0);
  return Matrix(n, n, std::move(entries));
}

// --- six-dimensional pair with composition series of sizes (2,2,2) ---------

inline std::vector<Matrix> pair_bt222() {
  Matrix a1 = real_mat(6, {3, 2, 1, 0, 1, 1,  //
                           0, 5, 0, 0, 0, 0,  //
                           0, 1, 4, 0, 1, 2,  //
                           1, 3, 1, 1, 1, 3,  //
                           0, 2, 0, 0, 2, 5,  //
                           0, 1, 0, 0, 0, 6});
  Matrix a2 = real_mat(6, {44, 12, 4,  -4, 8,  4,   //
                           0,  36, 0,  0,  0,  -1,  //
                           0,  12, 32, 0,  4,  4,   //
                           4,  16, 8,  52, 4,  4,   //
                           0,  4,  -1, 0,  28, 8,   //
                           0,  4,  0,  0,  0,  40});
  return {a1, a2};
}

// Quotient of the pair above by span{e1, e4}, in the basis (e2, e3, e5, e6).
inline std::vector<Matrix> pair_bt222_quotient4() {
  Matrix t1 = real_mat(4, {5, 0, 0, 0,  //
                           1, 4, 1, 2,  //
                           2, 0, 2, 5,  //
                           1, 0, 0, 6});
  Matrix t2 = real_mat(4, {36, 0,  0,  -1,  //
                           12, 32, 4,  4,   //
                           4,  -1, 28, 8,   //
                           4,  0,  0,  40});
  return {t1, t2};
}

// Final irreducible 2x2 quotient (basis e2, e6 of the original space).
inline std::vector<Matrix> pair_bt222_quotient2() {
  return {real_mat(2, {5, 0, 1, 6}), real_mat(2, {36, -1, 4, 40})};
}

// The pair conjugated by the permutation (e1 e4 e3 e5 e2 e6): block upper
// triangular with 2x2 diagonal blocks.
inline std::vector<Matrix> pair_bt222_transformed() {
  Matrix b1 = real_mat(6, {3, 0, 1, 1, 2, 1,  //
                           1, 1, 1, 1, 3, 3,  //
                           0, 0, 4, 1, 1, 2,  //
                           0, 0, 0, 2, 2, 5,  //
                           0, 0, 0, 0, 5, 0,  //
                           0, 0, 0, 0, 1, 6});
  Matrix b2 = real_mat(6, {44, -4, 4,  8,  12, 4,   //
                           4,  52, 8,  4,  16, 4,   //
                           0,  0,  32, 4,  12, 4,   //
                           0,  0,  -1, 28, 4,  8,   //
                           0,  0,  0,  0,  36, -1,  //
                           0,  0,  0,  0,  4,  40});
  return {b1, b2};
}

// --- seven-dimensional pairs, unitary block diagonalizable -----------------

inline std::vector<Matrix> pair_bd1222() {
  Matrix a1 = real_mat(7, {3, 0, 0, 0, 0, 0, 0,  //
                           0, 2, 0, 0, 0, 0, 0,  //
                           0, 0, 2, 0, 0, 0, 0,  //
                           0, 0, 0, 1, 0, 0, 0,  //
                           0, 0, 0, 0, 1, 0, 0,  //
                           0, 0, 0, 0, 0, 1, 0,  //
                           0, 0, 0, 0, 0, 0, 3});
  Matrix a2 = real_mat(7, {0, 0, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 0, 0, 0, 0,  //
                           0, 1, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 1, 0, 0, 0,  //
                           1, 0, 0, 0, 0, 0, 0});
  return {a1, a2};
}

inline std::vector<Matrix> pair_bd223() {
  Matrix a1 = real_mat(7, {3, 0, 0, 0, 0, 0, 0,  //
                           0, 2, 0, 0, 0, 0, 0,  //
                           0, 0, 2, 0, 0, 0, 0,  //
                           0, 0, 0, 1, 0, 0, 0,  //
                           0, 0, 0, 0, 1, 0, 0,  //
                           0, 0, 0, 0, 0, 1, 0,  //
                           0, 0, 0, 0, 0, 0, 3});
  Matrix a2 = real_mat(7, {0, 0, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 1, 0, 0, 0,  //
                           0, 1, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 0, 0, 0, 0,  //
                           0, 0, 0, 0, 1, 0, 0,  //
                           0, 0, 0, 0, 1, 0, 0,  //
                           1, 0, 0, 0, 0, 0, 0});
  return {a1, a2};
}

// --- nine-dimensional triple, block sizes {1,1,2,2,3} -----------------------

inline std::vector<Matrix> triple_bd11223() {
  Matrix a1 = real_mat(9, {0, 0, 0, 0,  0, 0,  0,  0, 0,  //
                           0, 2, 0, 0,  0, 0,  0,  0, 0,  //
                           0, 0, 1, 0,  0, 0,  0,  0, 0,  //
                           0, 0, 0, -2, 0, 0,  0,  0, 0,  //
                           0, 0, 0, 0,  0, 0,  0,  0, 0,  //
                           0, 0, 0, 0,  0, -1, 0,  0, 0,  //
                           0, 0, 0, 0,  0, 0,  -1, 0, 0,  //
                           0, 0, 0, 0,  0, 0,  0,  1, 0,  //
                           0, 0, 0, 0,  0, 0,  0,  0, 0});
  Matrix a2 = real_mat(9, {0,  0, 0, 1,  0, 0, 0,  0, 0,  //
                           -1, 0, 0, 0,  1, 0, 0,  0, 0,  //
                           0,  0, 0, 0,  0, 1, 0,  0, 0,  //
                           0,  0, 0, 0,  0, 0, 0,  0, 0,  //
                           0,  0, 0, -1, 0, 0, 0,  0, 0,  //
                           0,  0, 0, 0,  0, 0, 0,  0, 0,  //
                           0,  0, 0, 0,  0, 0, 0,  0, 0,  //
                           0,  0, 0, 0,  0, 0, -1, 0, 0,  //
                           0,  0, 0, 0,  0, 0, 0,  0, 0});
  Matrix a3 = real_mat(9, {0, -1, 0, 0, 0,  0, 0, 0,  0,  //
                           0, 0,  0, 0, 0,  0, 0, 0,  0,  //
                           0, 0,  0, 0, 0,  0, 0, 0,  0,  //
                           1, 0,  0, 0, -1, 0, 0, 0,  0,  //
                           0, 1,  0, 0, 0,  0, 0, 0,  0,  //
                           0, 0,  1, 0, 0,  0, 0, 0,  0,  //
                           0, 0,  0, 0, 0,  0, 0, -1, 0,  //
                           0, 0,  0, 0, 0,  0, 0, 0,  0,  //
                           0, 0,  0, 0, 0,  0, 0, 0,  0});
  return {a1, a2, a3};
}

// --- three-dimensional pair commuting with a nilpotent-plus-projector ------

inline std::vector<Matrix> pair_bd21() {
  Matrix a1 = real_mat(3, {1, 0, 0,  //
                           2, 2, 0,  //
                           1, 1, 1});
  Matrix a2 = real_mat(3, {0, 0, 0,  //
                           2, 1, 0,  //
                           0, 1, 0});
  return {a1, a2};
}

// A non-Hermitian, non-diagonalizable matrix commuting with pair_bd21();
// eigenvalues 0 (multiplicity 2) and 1.
inline Matrix pair_bd21_commuting() {
  return real_mat(3, {0, 0, 0,  //
                      2, 1, 0,  //
                      0, 1, 0});
}

// Generalized eigenvector basis of the commuting matrix above.
inline Matrix pair_bd21_transform() {
  return real_mat(3, {0, -0.5, 0,  //
                      0, 1, 1,     //
                      1, 0, 1});
}

// --- six matrices made of two paired 3x3 rotation-generator families --------

inline std::vector<Matrix> family_bd33() {
  Matrix a1 = real_mat(6, {0, 0,  0,  0, 0, 0,  //
                           0, 0,  0,  1, 0, 0,  //
                           0, 0,  0,  0, 1, 0,  //
                           0, -1, 0,  0, 0, 0,  //
                           0, 0,  -1, 0, 0, 0,  //
                           0, 0,  0,  0, 0, 0});
  Matrix a2 = real_mat(6, {0, 0, 0,  -1, 0, 0,  //
                           0, 0, 0,  0,  0, 0,  //
                           0, 0, 0,  0,  0, 1,  //
                           1, 0, 0,  0,  0, 0,  //
                           0, 0, 0,  0,  0, 0,  //
                           0, 0, -1, 0,  0, 0});
  Matrix a3 = real_mat(6, {0, 0, 0, 0, -1, 0,   //
                           0, 0, 0, 0, 0,  -1,  //
                           0, 0, 0, 0, 0,  0,   //
                           0, 0, 0, 0, 0,  0,   //
                           1, 0, 0, 0, 0,  0,   //
                           0, 1, 0, 0, 0,  0});
  Matrix a4 = real_mat(6, {0,  1, 0, 0, 0,  0,  //
                           -1, 0, 0, 0, 0,  0,  //
                           0,  0, 0, 0, 0,  0,  //
                           0,  0, 0, 0, 0,  0,  //
                           0,  0, 0, 0, 0,  1,  //
                           0,  0, 0, 0, -1, 0});
  Matrix a5 = real_mat(6, {0,  0, 1, 0, 0, 0,   //
                           0,  0, 0, 0, 0, 0,   //
                           -1, 0, 0, 0, 0, 0,   //
                           0,  0, 0, 0, 0, -1,  //
                           0,  0, 0, 0, 0, 0,   //
                           0,  0, 0, 1, 0, 0});
  Matrix a6 = real_mat(6, {0, 0,  0, 0,  0, 0,  //
                           0, 0,  1, 0,  0, 0,  //
                           0, -1, 0, 0,  0, 0,  //
                           0, 0,  0, 0,  1, 0,  //
                           0, 0,  0, -1, 0, 0,  //
                           0, 0,  0, 0,  0, 0});
  return {a1, a2, a3, a4, a5, a6};
}

// Symmetric involution commuting with family_bd33(); eigenvalues -1 and 1,
// each of multiplicity 3.
inline Matrix family_bd33_commuting() {
  return real_mat(6, {0, 0,  0, 0, 0,  1,  //
                      0, 0,  0, 0, -1, 0,  //
                      0, 0,  0, 1, 0,  0,  //
                      0, 0,  1, 0, 0,  0,  //
                      0, -1, 0, 0, 0,  0,  //
                      1, 0,  0, 0, 0,  0});
}

}  // namespace fixtures
