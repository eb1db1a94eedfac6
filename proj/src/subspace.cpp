#include "sbd/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "sbd/errors.hpp"
#include "sbd/kernels.hpp"
#include "sbd/linalg.hpp"

namespace sbd {
namespace {

void check_square_family(const std::vector<Matrix>& omega) {
  if (omega.empty()) throw std::invalid_argument("matrix set is empty");
  const int n = omega.front().rows();
  for (const Matrix& a : omega)
    if (!a.square() || a.rows() != n)
      throw DimensionMismatch("matrix set members must be square, equal size");
}

// Orthonormal rows accumulated incrementally; rows are contiguous so the
// projection loop stays in the kernels.
class RowBasis {
 public:
  explicit RowBasis(int n) : n_(n) {}

  int size() const { return static_cast<int>(rows_.size()); }

  const std::vector<cd>& row(int i) const { return rows_[i]; }

  // Projects w off the span; appends the remainder when its norm exceeds
  // threshold * ||w||. Returns true when the basis grew.
  bool absorb(std::vector<cd> w, double threshold) {
    const auto& k = kern::active();
    const double wn = std::sqrt(
        std::max(0.0, k.dotc(w.data(), w.data(), n_).real()));
    if (wn <= 1e-300) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : rows_) {
        const cd proj = k.dotc(q.data(), w.data(), n_);
        k.axpy(-proj, q.data(), w.data(), n_);
      }
    }
    const double rn = std::sqrt(
        std::max(0.0, k.dotc(w.data(), w.data(), n_).real()));
    if (rn <= threshold * wn) return false;
    const double inv = 1.0 / rn;
    for (cd& z : w) z *= inv;
    rows_.push_back(std::move(w));
    return true;
  }

  Matrix as_basis_matrix() const {
    Matrix b(n_, size());
    for (int j = 0; j < size(); ++j)
      for (int i = 0; i < n_; ++i) b(i, j) = rows_[j][i];
    return b;
  }

 private:
  int n_;
  std::vector<std::vector<cd>> rows_;
};

std::vector<cd> matvec(const Matrix& a, const std::vector<cd>& x) {
  std::vector<cd> y(a.rows());
  kern::active().matmul(a.data(), x.data(), y.data(), a.rows(), a.cols(), 1);
  return y;
}

}  // namespace

Subspace orbit_closure(const std::vector<Matrix>& omega, const Matrix& v,
                       const Tolerances& tol, int max_rounds) {
  check_square_family(omega);
  const int n = omega.front().rows();
  if (v.rows() != n || v.cols() != 1)
    throw DimensionMismatch("seed vector must be n-by-1");
  std::vector<cd> seed(v.data(), v.data() + n);
  RowBasis basis(n);
  if (!basis.absorb(seed, 0.0))
    throw std::invalid_argument("seed vector must be nonzero");

  double set_scale = 1.0;
  for (const Matrix& a : omega) set_scale = std::max(set_scale, a.max_abs());
  const auto& k = kern::active();

  if (max_rounds <= 0) max_rounds = n;
  const long cap =
      static_cast<long>(max_rounds) * n + 1;  // generous; growth caps at n
  long processed = 0;
  for (int next = 0; next < basis.size() && basis.size() < n; ++next) {
    if (++processed > cap) break;
    const std::vector<cd> q = basis.row(next);
    for (const Matrix& a : omega) {
      std::vector<cd> w = matvec(a, q);
      // images at roundoff scale are treated as zero, not as new directions
      const double wn =
          std::sqrt(std::max(0.0, k.dotc(w.data(), w.data(), n).real()));
      if (wn <= tol.rank_tol * set_scale) continue;
      basis.absorb(std::move(w), tol.rank_tol);
      if (basis.size() == n) break;
    }
  }
  return Subspace{n, basis.as_basis_matrix()};
}

double invariance_residual(const std::vector<Matrix>& omega,
                           const Subspace& w) {
  if (w.dim() == 0) return 0.0;
  double worst = 0.0;
  for (const Matrix& a : omega) {
    const Matrix aw = a * w.basis;
    const Matrix proj = w.basis * (w.basis.adjoint() * aw);
    worst = std::max(worst, (aw - proj).max_abs());
  }
  return worst;
}

std::vector<Matrix> compress_to_subspace(const std::vector<Matrix>& omega,
                                         const Subspace& w) {
  std::vector<Matrix> out;
  out.reserve(omega.size());
  const Matrix wh = w.basis.adjoint();
  for (const Matrix& a : omega) out.push_back(wh * (a * w.basis));
  return out;
}

Subspace canonical_form(const Subspace& w) {
  const int n = w.ambient_dim;
  const int d = w.dim();
  if (d == 0) return w;
  const Matrix p = w.basis * w.basis.adjoint();
  RowBasis basis(n);
  std::vector<cd> col(n);
  for (int j = 0; j < n && basis.size() < d; ++j) {
    for (int i = 0; i < n; ++i) col[i] = p(i, j);
    basis.absorb(col, 1e-6);
  }
  Matrix b = basis.as_basis_matrix();
  if (b.cols() != d) return w;  // projector degenerated; keep original
  // Fix each column's phase: largest-magnitude entry becomes real positive.
  for (int j = 0; j < d; ++j) {
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
      const double m = std::abs(b(i, j));
      if (m > best * (1.0 + 1e-12)) {
        best = m;
        arg = i;
      }
    }
    if (best > 0.0) {
      const cd ph = std::conj(b(arg, j)) / best;
      for (int i = 0; i < n; ++i) b(i, j) *= ph;
    }
  }
  return Subspace{n, std::move(b)};
}

SubspaceKey canonical_key(const Subspace& canonical) {
  SubspaceKey key;
  key.dim = canonical.dim();
  const Matrix& b = canonical.basis;
  for (int j = 0; j < b.cols(); ++j) {
    int piv = b.rows();
    for (int i = 0; i < b.rows(); ++i) {
      if (std::abs(b(i, j)) > 1e-6) {
        piv = i;
        break;
      }
    }
    key.pivots.push_back(piv);
  }
  key.entries.assign(b.entries().begin(), b.entries().end());
  return key;
}

bool key_less(const SubspaceKey& a, const SubspaceKey& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.pivots != b.pivots) return a.pivots < b.pivots;
  // Larger leading entries first, so coordinate-aligned bases order before
  // mixed ones with the same pivots.
  for (size_t i = 0; i < std::min(a.entries.size(), b.entries.size()); ++i) {
    const cd x = a.entries[i], y = b.entries[i];
    if (x.real() != y.real()) return x.real() > y.real();
    if (x.imag() != y.imag()) return x.imag() > y.imag();
  }
  return a.entries.size() < b.entries.size();
}

namespace {

// Keys rounded before comparison so candidates that agree up to roundoff
// deduplicate.
std::vector<long long> rounded_signature(const SubspaceKey& key) {
  std::vector<long long> sig;
  sig.reserve(key.entries.size() * 2 + key.pivots.size() + 1);
  sig.push_back(key.dim);
  for (int p : key.pivots) sig.push_back(p);
  for (const cd& z : key.entries) {
    sig.push_back(std::llround(z.real() * 1e8));
    sig.push_back(std::llround(z.imag() * 1e8));
  }
  return sig;
}

// All spaces of common eigenvectors: starts from the full space and refines
// through each matrix (and each random combination) one eigenvalue at a time,
// pruning empty intersections.
std::vector<Subspace> common_eigenvector_spaces(
    const std::vector<Matrix>& omega, const std::vector<Matrix>& combos,
    const Tolerances& tol) {
  const int s = omega.front().rows();
  std::vector<Subspace> spaces = {Subspace{s, Matrix::identity(s)}};
  auto refine = [&](const Matrix& r) {
    if (spaces.empty()) return;
    const Spectrum sp = spectrum(r, tol);
    const double floor = std::max(1.0, r.max_abs());
    std::vector<Subspace> next;
    for (const Subspace& e : spaces) {
      for (const cd& lambda : sp.eigenvalues) {
        Matrix shifted = r * e.basis;
        shifted -= lambda * e.basis;
        const Subspace k = nullspace_floored(shifted, tol, floor);
        if (k.dim() >= 1)
          next.push_back(Subspace{s, e.basis * k.basis});
      }
    }
    spaces = std::move(next);
  };
  for (const Matrix& a : omega) refine(a);
  for (const Matrix& r : combos) refine(r);
  return spaces;
}

}  // namespace

std::optional<Subspace> find_minimal_invariant_subspace(
    const std::vector<Matrix>& omega, int max_dim, const SearchConfig& cfg,
    const Tolerances& tol) {
  check_square_family(omega);
  const int s = omega.front().rows();
  if (max_dim < 1 || max_dim >= s)
    throw std::invalid_argument("max_dim must satisfy 1 <= max_dim < s");
  if (cfg.n_seed_combinations < 1)
    throw std::invalid_argument("n_seed_combinations must be >= 1");

  SeededRng rng(cfg.rng_seed);
  std::vector<Matrix> combos;
  if (omega.size() > 1) {
    for (int t = 0; t < cfg.n_seed_combinations; ++t) {
      Matrix r(s, s);
      for (const Matrix& a : omega) {
        const cd c = rng.complex_unit_square();
        r += c * a;
      }
      combos.push_back(std::move(r));
    }
  }

  // d = 1: exhaustive over compatible eigenvalue tuples.
  if (cfg.exhaustive_dim_one) {
    const std::vector<Subspace> spaces =
        common_eigenvector_spaces(omega, combos, tol);
    std::optional<Subspace> best;
    std::optional<SubspaceKey> best_key;
    for (const Subspace& e : spaces) {
      const Subspace ec = canonical_form(e);
      Subspace line{s, ec.basis.block(0, 0, s, 1)};
      if (invariance_residual(omega, line) > tol.residual_tol) continue;
      SubspaceKey key = canonical_key(line);
      if (!best || key_less(key, *best_key)) {
        best = line;
        best_key = key;
      }
    }
    if (best) return best;
  }

  if (max_dim < 2) return std::nullopt;

  // d >= 2: orbit closures of eigenvectors, then recursive shrinking.
  std::vector<Subspace> candidates;
  std::vector<std::vector<long long>> seen;
  auto add_candidate = [&](const Subspace& w) {
    const Subspace wc = canonical_form(w);
    const auto sig = rounded_signature(canonical_key(wc));
    if (std::find(seen.begin(), seen.end(), sig) != seen.end()) return;
    seen.push_back(sig);
    candidates.push_back(wc);
  };

  std::vector<Matrix> seeds = omega;
  seeds.insert(seeds.end(), combos.begin(), combos.end());
  for (const Matrix& r : seeds) {
    const Spectrum sp = spectrum(r, tol);
    const double floor = std::max(1.0, r.max_abs());
    for (const cd& lambda : sp.eigenvalues) {
      Matrix shifted = r;
      for (int i = 0; i < s; ++i) shifted(i, i) -= lambda;
      const Subspace eig = nullspace_floored(shifted, tol, floor);
      for (int j = 0; j < eig.dim(); ++j) {
        const Subspace w =
            orbit_closure(omega, eig.basis.col(j), tol, cfg.max_orbit_rounds);
        if (w.dim() < 1 || w.dim() > max_dim) continue;
        if (invariance_residual(omega, w) > tol.residual_tol) continue;
        add_candidate(w);
      }
    }
  }

  std::optional<Subspace> best;
  std::optional<SubspaceKey> best_key;
  auto offer = [&](const Subspace& w) {
    SubspaceKey key = canonical_key(w);
    if (!best || key.dim < best->dim() ||
        (key.dim == best->dim() && key_less(key, *best_key))) {
      best = w;
      best_key = key;
    }
  };

  for (const Subspace& w : candidates) {
    Subspace cur = w;
    if (cur.dim() >= 2) {
      const std::vector<Matrix> restricted = compress_to_subspace(omega, cur);
      const auto inner =
          find_minimal_invariant_subspace(restricted, cur.dim() - 1, cfg, tol);
      if (inner) {
        Subspace lifted{s, cur.basis * inner->basis};
        if (invariance_residual(omega, lifted) <= tol.residual_tol)
          cur = canonical_form(lifted);
      }
    }
    offer(cur);
  }
  return best;
}

std::vector<Matrix> restrict_to_quotient(const std::vector<Matrix>& omega,
                                         const Transform& s, int d,
                                         const Tolerances& tol) {
  check_square_family(omega);
  const int n = omega.front().rows();
  if (!s.s.square() || s.s.rows() != n || !s.s_inv.square() ||
      s.s_inv.rows() != n)
    throw DimensionMismatch("transform does not match matrix set dimension");
  if (d < 0 || d > n) throw DimensionMismatch("invalid split dimension");
  std::vector<Matrix> out;
  out.reserve(omega.size());
  for (const Matrix& a : omega) {
    const Matrix m = s.s_inv * (a * s.s);
    if (d > 0 && d < n) {
      const double leak = m.block(d, 0, n - d, d).max_abs();
      if (leak > tol.residual_tol)
        throw NotInvariant(
            "leading columns do not span a common invariant subspace");
    }
    out.push_back(d == 0 ? m : m.block(d, d, n - d, n - d));
  }
  return out;
}

}  // namespace sbd
