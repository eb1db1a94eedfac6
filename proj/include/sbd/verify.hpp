#pragma once

#include <string>
#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

// Largest magnitude among the entries a block structure requires to be zero
// (BT: blocks strictly below the diagonal; BD: all off-diagonal blocks).
double block_pattern_residual(const Matrix& m, const BlockPartition& p);

struct ValidationResult {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<double> pattern_residuals;  // recomputed, per input matrix
};

// Recomputes the transformed set from omega and the report's transform and
// checks: partition consistency, t >= 2, transform invertibility (and
// unitarity when flagged), zero-pattern residuals, and per-matrix eigenvalue
// multiset preservation.
ValidationResult validate_report(const std::vector<Matrix>& omega,
                                 const DecompositionReport& r,
                                 const Tolerances& tol);

// True when the two matrices have the same eigenvalue multiset within
// per_eig_tol; near-defective eigenvalues are compared through their cluster
// means (the raw values of a multiple eigenvalue are individually ill
// conditioned while the cluster mean is not).
bool spectra_match(const Matrix& a, const Matrix& b, double per_eig_tol);

}  // namespace sbd
