#pragma once

#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

// Simultaneous unitary block triangularization: builds a composition series
// of common invariant subspaces (minimal-dimension first), extends each lift
// with the orthogonal complement, and returns the unitary basis change with
// the resulting block sizes. Throws NotTriangularizable when no common
// invariant subspace exists at the first step.
DecompositionReport block_triangularize(const std::vector<Matrix>& omega,
                                        const SearchConfig& cfg,
                                        const Tolerances& tol);

}  // namespace sbd
