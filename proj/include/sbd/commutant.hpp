#pragma once

#include <utility>
#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

// Basis of { M : M A = A M for every A in the set }, obtained from the null
// space of the stacked Sylvester operators. Never empty (contains I).
struct CommutantBasis {
  int ambient_dim = 0;
  std::vector<Matrix> members;

  int dim() const { return static_cast<int>(members.size()); }
};

CommutantBasis commutant_basis(const std::vector<Matrix>& omega,
                               const Tolerances& tol);

// A commuting matrix maximizing the number of distinct eigenvalues over the
// basis members and seeded random combinations (real coefficients first,
// complex only when real ones stay at a single eigenvalue). Throws
// OnlyScalarSpectrum when every candidate has one distinct eigenvalue.
std::pair<Matrix, Spectrum> select_commuting_matrix(const CommutantBasis& b,
                                                    const SearchConfig& cfg,
                                                    const Tolerances& tol);

// Simultaneous block diagonalization by the invertible matrix assembled from
// the generalized eigenspaces of a chosen commuting matrix; block sizes are
// the algebraic multiplicities.
DecompositionReport block_diagonalize_invertible(
    const std::vector<Matrix>& omega, const SearchConfig& cfg,
    const Tolerances& tol);

}  // namespace sbd
