#include "sbd/triangularize.hpp"

#include "sbd/errors.hpp"
#include "sbd/linalg.hpp"
#include "sbd/subspace.hpp"
#include "sbd/verify.hpp"

namespace sbd {

DecompositionReport block_triangularize(const std::vector<Matrix>& omega,
                                        const SearchConfig& cfg,
                                        const Tolerances& tol) {
  tol.validate();
  if (omega.empty()) throw std::invalid_argument("matrix set is empty");
  const int n = omega.front().rows();
  for (const Matrix& a : omega)
    if (!a.square() || a.rows() != n)
      throw DimensionMismatch("matrix set members must be square, equal size");
  if (n < 2) throw DimensionMismatch("need dimension >= 2");

  Matrix accumulated(n, 0);  // lifted invariant chain, orthonormal columns
  Matrix complement = Matrix::identity(n);
  std::vector<Matrix> current = omega;
  std::vector<int> sizes;
  bool final_certified = false;

  while (true) {
    const int s = complement.cols();
    if (s <= 1) {
      if (s == 1) sizes.push_back(1);
      final_certified = true;
      break;
    }
    const auto found =
        find_minimal_invariant_subspace(current, s - 1, cfg, tol);
    if (!found) {
      if (sizes.empty()) {
        const bool certified = (s == 2);
        throw NotTriangularizable(
            certified ? "no simultaneous block triangularization"
                      : "no simultaneous block triangularization (no common "
                        "invariant subspace found)",
            certified);
      }
      final_certified = (s == 2);
      sizes.push_back(s);
      break;
    }
    const int d = found->dim();
    const Matrix lifted = complement * found->basis;
    accumulated = hcat(accumulated, lifted);
    sizes.push_back(d);
    complement =
        orthogonal_complement(Subspace{n, accumulated}, n, tol).basis;
    if (complement.cols() == 0) break;
    current = compress_to_subspace(omega, Subspace{n, complement});
  }

  const Matrix assembled = hcat(accumulated, complement);
  const Matrix q = invertible_to_unitary(assembled, tol);

  DecompositionReport report;
  report.transform.s = q;
  report.transform.s_inv = q.adjoint();
  report.transform.unitary = true;
  report.partition = BlockPartition{sizes, BlockKind::BT};

  bool chain_certified = final_certified;
  for (size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] > 2) chain_certified = false;

  double worst = 0.0;
  for (const Matrix& a : omega) {
    Matrix t = report.transform.s_inv * (a * report.transform.s);
    const double r = block_pattern_residual(t, report.partition);
    worst = std::max(worst, r);
    report.transformed.push_back(std::move(t));
    report.residuals.push_back(r);
  }
  if (worst > tol.residual_tol)
    throw InternalInconsistency(
        "triangularized set exceeds the residual tolerance");

  report.provenance.algorithm = 'A';
  report.provenance.seed = cfg.rng_seed;
  report.provenance.trials = cfg.n_seed_combinations;
  report.provenance.chain = sizes;
  report.provenance.final_block_certified = final_certified;
  report.provenance.chain_minimal_certified = chain_certified;
  return report;
}

}  // namespace sbd
