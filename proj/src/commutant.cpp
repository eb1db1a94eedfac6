#include "sbd/commutant.hpp"

#include <algorithm>

#include "sbd/errors.hpp"
#include "sbd/linalg.hpp"
#include "sbd/verify.hpp"

namespace sbd {
namespace {

void check_family(const std::vector<Matrix>& omega) {
  if (omega.empty()) throw std::invalid_argument("matrix set is empty");
  const int n = omega.front().rows();
  for (const Matrix& a : omega)
    if (!a.square() || a.rows() != n)
      throw DimensionMismatch("matrix set members must be square, equal size");
}

// Column-major vectorization so that vec(AM - MA) = (I (x) A - A^T (x) I) vec(M).
Matrix unvec_column_major(const Matrix& v, int n) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = v(j * n + i, 0);
  return m;
}

}  // namespace

CommutantBasis commutant_basis(const std::vector<Matrix>& omega,
                               const Tolerances& tol) {
  check_family(omega);
  const int n = omega.front().rows();
  const Matrix eye = Matrix::identity(n);
  Matrix x(0, 0);
  for (const Matrix& a : omega) {
    const Matrix block = kronecker(eye, a) - kronecker(a.transpose(), eye);
    x = vcat(x, block);
  }
  const Subspace ker = nullspace(x, tol);
  CommutantBasis basis;
  basis.ambient_dim = n;
  for (int j = 0; j < ker.dim(); ++j)
    basis.members.push_back(unvec_column_major(ker.basis.col(j), n));
  return basis;
}

std::pair<Matrix, Spectrum> select_commuting_matrix(const CommutantBasis& b,
                                                    const SearchConfig& cfg,
                                                    const Tolerances& tol) {
  if (b.members.empty()) throw std::invalid_argument("empty commutant basis");
  SeededRng rng(cfg.rng_seed);

  Matrix best_c;
  Spectrum best_sp;
  int best_count = 0;
  auto consider = [&](const Matrix& c) {
    const Spectrum sp = spectrum(c, tol);
    if (sp.distinct_count() > best_count) {
      best_count = sp.distinct_count();
      best_c = c;
      best_sp = sp;
    }
  };

  for (const Matrix& m : b.members) consider(m);
  const int n = b.ambient_dim;
  for (int t = 0; t < cfg.n_seed_combinations; ++t) {
    Matrix c(n, n);
    for (const Matrix& m : b.members) c += cd(rng.symmetric(), 0.0) * m;
    consider(c);
  }
  if (best_count <= 1) {
    // Real coefficients failed to separate anything; complex ones get one try.
    for (int t = 0; t < cfg.n_seed_combinations; ++t) {
      Matrix c(n, n);
      for (const Matrix& m : b.members)
        c += cd(rng.symmetric(), rng.symmetric()) * m;
      consider(c);
    }
  }
  if (best_count <= 1)
    throw OnlyScalarSpectrum(
        "every commuting matrix sampled has a single eigenvalue; the set does "
        "not admit simultaneous block diagonalization by an invertible "
        "matrix");
  return {best_c, best_sp};
}

DecompositionReport block_diagonalize_invertible(
    const std::vector<Matrix>& omega, const SearchConfig& cfg,
    const Tolerances& tol) {
  tol.validate();
  check_family(omega);
  const int n = omega.front().rows();
  if (n < 2) throw DimensionMismatch("need dimension >= 2");

  auto attempt = [&](const Tolerances& t) -> DecompositionReport {
    const CommutantBasis basis = commutant_basis(omega, t);
    auto [c, sp] = select_commuting_matrix(basis, cfg, t);
    const std::vector<Subspace> spaces = generalized_eigenspaces(c, sp, t);
    Matrix s(n, 0);
    for (const Subspace& g : spaces) s = hcat(s, g.basis);
    DecompositionReport report;
    report.transform.s = s;
    report.transform.s_inv = inverse(s, t);
    report.transform.unitary = false;
    report.partition = BlockPartition{sp.multiplicities, BlockKind::BD};
    double worst = 0.0;
    for (const Matrix& a : omega) {
      Matrix m = report.transform.s_inv * (a * report.transform.s);
      const double r = block_pattern_residual(m, report.partition);
      worst = std::max(worst, r);
      report.transformed.push_back(std::move(m));
      report.residuals.push_back(r);
    }
    if (worst > t.residual_tol)
      throw VerificationFailed(
          "transformed set is not block diagonal within tolerance");
    report.provenance.algorithm = 'C';
    report.provenance.seed = cfg.rng_seed;
    report.provenance.trials = cfg.n_seed_combinations;
    report.provenance.commutant_dim = basis.dim();
    report.provenance.commuting_matrix = c;
    report.provenance.commuting_spectrum = sp;
    return report;
  };

  try {
    return attempt(tol);
  } catch (const VerificationFailed&) {
    return attempt(tol.tightened(0.01));
  } catch (const DefectiveTolerance&) {
    return attempt(tol.tightened(0.01));
  }
}

}  // namespace sbd
