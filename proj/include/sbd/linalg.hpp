#pragma once

#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

// Singular values and right singular vectors from one-sided Jacobi: sigma
// descending, v unitary with column j matching sigma[j]. Left singular
// directions are a * v(:, j) / sigma[j] where needed.
struct Svd {
  std::vector<double> sigma;
  Matrix v;
};

Svd jacobi_svd(const Matrix& a);

double sigma_max(const Matrix& a);
int numerical_rank(const Matrix& a, const Tolerances& tol);

// Orthonormal basis of { v : ||Mv|| <= rank_tol * sigma_max(M) * ||v|| }.
Subspace nullspace(const Matrix& m, const Tolerances& tol);

// Same, with the cutoff floored at rank_tol * scale_floor; callers that know
// the scale of the matrix M was derived from use this so that an all-noise M
// (sigma_max at roundoff level) reads as zero instead of full rank.
Subspace nullspace_floored(const Matrix& m, const Tolerances& tol,
                           double scale_floor);

// Orthonormal basis of the column span.
Subspace range_basis(const Matrix& m, const Tolerances& tol);

// Orthonormal basis of the orthogonal complement of span(b) in C^n.
Subspace orthogonal_complement(const Subspace& b, int n,
                               const Tolerances& tol = {});

// Q from S = QR by modified Gram-Schmidt with reorthogonalization; R has a
// positive real diagonal so Q is unique. Throws SingularMatrix when a pivot
// collapses below rank_tol * sigma_max(S).
Matrix invertible_to_unitary(const Matrix& s, const Tolerances& tol);

Matrix inverse(const Matrix& a, const Tolerances& tol);

// All eigenvalues (with multiplicity) of a square complex matrix, sorted by
// (real, imag) ascending. Hessenberg reduction followed by shifted QR.
std::vector<cd> eigenvalues(const Matrix& a);

// Distinct eigenvalues after merging any pair within eig_cluster_tol;
// representatives are multiplicity-weighted means.
Spectrum spectrum(const Matrix& c, const Tolerances& tol);

// For each distinct eigenvalue a basis of ker((C - lambda I)^multiplicity),
// with exactly `multiplicity` columns. Throws DefectiveTolerance when a
// kernel dimension disagrees with the algebraic multiplicity.
std::vector<Subspace> generalized_eigenspaces(const Matrix& c,
                                              const Spectrum& sp,
                                              const Tolerances& tol);

}  // namespace sbd
