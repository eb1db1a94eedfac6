#include "sbd/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sbd/errors.hpp"
#include "sbd/linalg.hpp"

namespace sbd {

double block_pattern_residual(const Matrix& m, const BlockPartition& p) {
  if (!m.square()) throw DimensionMismatch("pattern residual of non-square");
  if (p.total() != m.rows())
    throw PartitionMismatch("partition sizes do not sum to the dimension");
  for (int s : p.sizes)
    if (s < 1) throw PartitionMismatch("partition sizes must be >= 1");
  std::vector<int> offsets(p.sizes.size() + 1, 0);
  for (size_t b = 0; b < p.sizes.size(); ++b)
    offsets[b + 1] = offsets[b] + p.sizes[b];
  double worst = 0.0;
  const int t = p.count();
  for (int bi = 0; bi < t; ++bi) {
    for (int bj = 0; bj < t; ++bj) {
      const bool zero_block =
          (p.kind == BlockKind::BT) ? (bi > bj) : (bi != bj);
      if (!zero_block) continue;
      for (int i = offsets[bi]; i < offsets[bi + 1]; ++i)
        for (int j = offsets[bj]; j < offsets[bj + 1]; ++j)
          worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

namespace {

bool sorted_match(const std::vector<cd>& a, const std::vector<cd>& b,
                  double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

// Single-linkage clustering at the given radius; means are second-order
// accurate even when the individual eigenvalues of a defective cluster are
// not.
std::vector<std::pair<cd, int>> cluster_values(const std::vector<cd>& eig,
                                               double radius) {
  std::vector<std::pair<cd, int>> clusters;
  for (const cd& z : eig) clusters.push_back({z, 1});
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i + 1 < clusters.size() && !merged; ++i) {
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        const cd ri = clusters[i].first / static_cast<double>(clusters[i].second);
        const cd rj = clusters[j].first / static_cast<double>(clusters[j].second);
        if (std::abs(ri - rj) <= radius) {
          clusters[i].first += clusters[j].first;
          clusters[i].second += clusters[j].second;
          clusters.erase(clusters.begin() + j);
          merged = true;
          break;
        }
      }
    }
  }
  for (auto& c : clusters) c.first /= static_cast<double>(c.second);
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& x, const auto& y) {
              if (x.first.real() != y.first.real())
                return x.first.real() < y.first.real();
              return x.first.imag() < y.first.imag();
            });
  return clusters;
}

}  // namespace

namespace {

// Greedy nearest-neighbor assignment; robust against sort-order flips caused
// by roundoff in one coordinate.
bool greedy_match(const std::vector<cd>& a, const std::vector<cd>& b,
                  double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const cd& x : a) {
    int best = -1;
    double best_d = tol;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace

bool spectra_match(const Matrix& a, const Matrix& b, double per_eig_tol) {
  const std::vector<cd> ea = eigenvalues(a);
  const std::vector<cd> eb = eigenvalues(b);
  if (sorted_match(ea, eb, per_eig_tol)) return true;
  if (greedy_match(ea, eb, per_eig_tol)) return true;
  // A multiple eigenvalue of a defective matrix splits by ~sqrt(ulp * scale);
  // widen the cluster radius accordingly and compare the cluster means (the
  // means are second-order accurate where the raw values are not).
  const double scale = std::max(a.max_abs(), b.max_abs());
  const double radius =
      std::max(per_eig_tol, 64.0 * std::sqrt(2.2e-16 * std::max(scale, 1.0)));
  const auto ca = cluster_values(ea, radius);
  const auto cb = cluster_values(eb, radius);
  if (ca.size() != cb.size()) return false;
  std::vector<cd> ma, mb;
  for (const auto& c : ca) ma.push_back(c.first);
  for (const auto& c : cb) mb.push_back(c.first);
  if (!greedy_match(ma, mb, per_eig_tol)) return false;
  // multiplicities must agree cluster by cluster
  for (const auto& c : ca) {
    bool found = false;
    for (const auto& d : cb) {
      if (std::abs(c.first - d.first) <= per_eig_tol && c.second == d.second) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ValidationResult validate_report(const std::vector<Matrix>& omega,
                                 const DecompositionReport& r,
                                 const Tolerances& tol) {
  ValidationResult out;
  auto fail = [&](const std::string& reason) {
    out.pass = false;
    out.failures.push_back(reason);
  };

  if (omega.empty()) {
    fail("empty matrix set");
    return out;
  }
  const int n = omega.front().rows();
  if (r.partition.total() != n) {
    fail("partition sizes do not sum to the matrix dimension");
    return out;
  }
  if (r.partition.count() < 2) fail("trivial partition (t < 2)");
  if (!r.transform.s.square() || r.transform.s.rows() != n ||
      !r.transform.s_inv.square() || r.transform.s_inv.rows() != n) {
    fail("transform shape does not match the matrix set");
    return out;
  }

  const Matrix prod = r.transform.s * r.transform.s_inv;
  Matrix eye_err = prod - Matrix::identity(n);
  if (eye_err.max_abs() > 1e-8)
    fail("singular transform: s * s_inv deviates from the identity");

  if (r.transform.unitary) {
    const Matrix gram = r.transform.s.adjoint() * r.transform.s;
    if ((gram - Matrix::identity(n)).max_abs() > 1e-10 * n)
      fail("transform flagged unitary is not unitary");
  }

  for (size_t idx = 0; idx < omega.size(); ++idx) {
    const Matrix& a = omega[idx];
    if (!a.square() || a.rows() != n) {
      fail("matrix set members have inconsistent shapes");
      return out;
    }
    const Matrix t = r.transform.s_inv * (a * r.transform.s);
    double res = 0.0;
    try {
      res = block_pattern_residual(t, r.partition);
    } catch (const PartitionMismatch& e) {
      fail(e.what());
      return out;
    }
    out.pattern_residuals.push_back(res);
    if (res > tol.residual_tol)
      fail("pattern residual exceeds tolerance for matrix " +
           std::to_string(idx));
    try {
      if (!spectra_match(a, t, 1e-7))
        fail("eigenvalue multiset not preserved for matrix " +
             std::to_string(idx));
    } catch (const ConvergenceFailure&) {
      fail("eigenvalue computation failed for matrix " + std::to_string(idx));
    }
  }
  return out;
}

}  // namespace sbd
