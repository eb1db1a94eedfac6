#pragma once

#include <optional>
#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

// Smallest subspace containing v that is closed under every matrix in omega:
// repeatedly apply the set to the current basis and re-orthonormalize until
// the rank stabilizes.
Subspace orbit_closure(const std::vector<Matrix>& omega, const Matrix& v,
                       const Tolerances& tol, int max_rounds = 0);

// Common invariant subspace of dimension <= max_dim, of the smallest
// dimension the search discovers, or nothing. Dimension 1 is searched
// exhaustively (eigenvalue-tuple intersection); higher dimensions come from
// orbit closures of eigenvectors of the set members and of seeded random
// combinations, shrunk recursively. Deterministic given cfg.rng_seed.
std::optional<Subspace> find_minimal_invariant_subspace(
    const std::vector<Matrix>& omega, int max_dim, const SearchConfig& cfg,
    const Tolerances& tol);

// Lower-right (s-d)x(s-d) blocks of S^-1 A S for each A; the first d columns
// of S must span a common invariant subspace (checked: throws NotInvariant
// when the lower-left block exceeds residual_tol).
std::vector<Matrix> restrict_to_quotient(const std::vector<Matrix>& omega,
                                         const Transform& s, int d,
                                         const Tolerances& tol);

// max over A of the largest entry of (I - W W^H) A W; zero for a subspace
// exactly closed under the set.
double invariance_residual(const std::vector<Matrix>& omega,
                           const Subspace& w);

// W^H A W for each member (the restriction to W when W is invariant).
std::vector<Matrix> compress_to_subspace(const std::vector<Matrix>& omega,
                                         const Subspace& w);

// Canonical orthonormal basis of the span (Gram-Schmidt over the projector's
// columns in index order, leading entries made real positive); used to
// deduplicate and order candidate subspaces reproducibly.
Subspace canonical_form(const Subspace& w);

struct SubspaceKey {
  int dim = 0;
  std::vector<int> pivots;
  std::vector<cd> entries;
};

SubspaceKey canonical_key(const Subspace& canonical);
bool key_less(const SubspaceKey& a, const SubspaceKey& b);

}  // namespace sbd
