#include "sbd/diagonalize.hpp"

#include "sbd/errors.hpp"
#include "sbd/triangularize.hpp"
#include "sbd/verify.hpp"

namespace sbd {
namespace {

bool duplicate_entry(const std::vector<Matrix>& set, const Matrix& m) {
  for (const Matrix& a : set) {
    if (a.rows() != m.rows() || a.cols() != m.cols()) continue;
    if ((a - m).max_abs() <= 1e-14 * std::max(1.0, m.max_abs())) return true;
  }
  return false;
}

}  // namespace

std::vector<Matrix> adjoin_conjugate_transposes(
    const std::vector<Matrix>& omega) {
  if (omega.empty()) throw std::invalid_argument("matrix set is empty");
  std::vector<Matrix> gamma;
  for (const Matrix& a : omega)
    if (!duplicate_entry(gamma, a)) gamma.push_back(a);
  for (const Matrix& a : omega) {
    Matrix ah = a.adjoint();
    if (!duplicate_entry(gamma, ah)) gamma.push_back(std::move(ah));
  }
  return gamma;
}

DecompositionReport block_diagonalize_unitary(const std::vector<Matrix>& omega,
                                              const SearchConfig& cfg,
                                              const Tolerances& tol) {
  tol.validate();
  const std::vector<Matrix> gamma = adjoin_conjugate_transposes(omega);

  auto attempt = [&](const Tolerances& t) -> DecompositionReport {
    DecompositionReport tri;
    try {
      tri = block_triangularize(gamma, cfg, t);
    } catch (const NotTriangularizable& e) {
      throw NotDiagonalizable(
          std::string("no simultaneous block diagonalization: ") + e.what(),
          e.certified);
    }
    DecompositionReport report;
    report.transform = tri.transform;
    report.partition = BlockPartition{tri.partition.sizes, BlockKind::BD};
    double worst = 0.0;
    for (const Matrix& a : omega) {
      Matrix m = report.transform.s_inv * (a * report.transform.s);
      const double r = block_pattern_residual(m, report.partition);
      worst = std::max(worst, r);
      report.transformed.push_back(std::move(m));
      report.residuals.push_back(r);
    }
    if (worst > t.residual_tol)
      throw InternalInconsistency(
          "adjoint-closed set triangularized but the original set is not "
          "block diagonal within tolerance");
    report.provenance = tri.provenance;
    report.provenance.algorithm = 'B';
    report.provenance.gamma_size = static_cast<int>(gamma.size());
    return report;
  };

  try {
    return attempt(tol);
  } catch (const InternalInconsistency&) {
    return attempt(tol.tightened(0.01));
  }
}

}  // namespace sbd
