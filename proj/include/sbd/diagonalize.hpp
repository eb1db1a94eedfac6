#pragma once

#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

// The input set together with the conjugate transpose of each member;
// members that duplicate an existing one (Hermitian elements, adjoint pairs)
// appear once.
std::vector<Matrix> adjoin_conjugate_transposes(const std::vector<Matrix>& omega);

// Simultaneous block diagonalization by a unitary matrix: triangularize the
// adjoint-closed set, then check that the original set is block diagonal
// under the same unitary. One retry with rank_tol tightened by 100x before
// declaring InternalInconsistency.
DecompositionReport block_diagonalize_unitary(const std::vector<Matrix>& omega,
                                              const SearchConfig& cfg,
                                              const Tolerances& tol);

}  // namespace sbd
