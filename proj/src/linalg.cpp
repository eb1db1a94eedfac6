#include "sbd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sbd/errors.hpp"
#include "sbd/kernels.hpp"

namespace sbd {
namespace {

constexpr double kUlp = 2.220446049250313e-16;

bool lex_less(const cd& a, const cd& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Rows of `rt` are the columns of the logical matrix; keeps the Jacobi and
// Gram-Schmidt inner loops contiguous.
Matrix to_column_rows(const Matrix& a) {
  return a.transpose();
}

Matrix from_column_rows(const Matrix& rt) {
  return rt.transpose();
}

// R factor of a tall matrix by Householder reflections; ||R x|| = ||A x|| for
// every x, which is all the one-sided Jacobi pass below needs. No pivoting:
// rank deficiency just yields small diagonal entries.
Matrix qr_r_factor(const Matrix& a) {
  const int m = a.rows(), nc = a.cols();
  Matrix w = a;
  std::vector<cd> v(m);
  for (int k = 0; k < nc; ++k) {
    double nx2 = 0.0;
    for (int i = k; i < m; ++i) nx2 += std::norm(w(i, k));
    const double nx = std::sqrt(nx2);
    if (nx <= 1e-300) continue;
    const cd x0 = w(k, k);
    const cd alpha =
        (std::abs(x0) == 0.0) ? cd(-nx, 0.0) : -(x0 / std::abs(x0)) * nx;
    v[k] = x0 - alpha;
    for (int i = k + 1; i < m; ++i) v[i] = w(i, k);
    double vn2 = 0.0;
    for (int i = k; i < m; ++i) vn2 += std::norm(v[i]);
    if (vn2 <= 1e-300) continue;
    const double inv = 1.0 / std::sqrt(vn2);
    for (int i = k; i < m; ++i) v[i] *= inv;
    for (int j = k; j < nc; ++j) {
      cd dot(0.0);
      for (int i = k; i < m; ++i) dot += std::conj(v[i]) * w(i, j);
      dot *= 2.0;
      for (int i = k; i < m; ++i) w(i, j) -= v[i] * dot;
    }
    w(k, k) = alpha;
    for (int i = k + 1; i < m; ++i) w(i, k) = cd(0.0);
  }
  Matrix r(nc, nc);
  for (int i = 0; i < nc; ++i)
    for (int j = i; j < nc; ++j) r(i, j) = w(i, j);
  return r;
}

}  // namespace

Svd jacobi_svd(const Matrix& a) {
  const int m = a.rows();
  const int nc = a.cols();
  Svd out;
  if (nc == 0) {
    out.v = Matrix(nc, nc);
    return out;
  }
  // Work on transposed storage: row p of wt is column p of the working
  // matrix. Entries are scale-normalized so the column-zero floor below is
  // meaningful for extreme inputs. Tall inputs are first reduced to their
  // square R factor, which preserves singular values and right vectors.
  const double scale = a.max_abs();
  const bool preconditioned = m > nc + nc / 4 + 1;
  Matrix wt = to_column_rows(preconditioned ? qr_r_factor(a) : a);
  const int mw = preconditioned ? nc : m;
  if (scale > 0.0) wt *= cd(1.0 / scale);
  Matrix vt = Matrix::identity(nc);
  const auto& k = kern::active();

  auto row_of = [&](Matrix& mat, int r, int len) {
    return mat.data() + static_cast<size_t>(r) * len;
  };
  double norm2max = 0.0;
  for (int p = 0; p < nc; ++p)
    norm2max = std::max(
        norm2max, k.dotc(row_of(wt, p, mw), row_of(wt, p, mw), mw).real());
  // Columns this far below the dominant one are numerically zero; they can
  // never converge by rotation (their correlation with large columns stays
  // order one while their norm underflows), so they are cleared outright.
  const double zero_floor = norm2max * 1e-80;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps && nc > 1; ++sweep) {
    double worst = 0.0;
    for (int p = 0; p < nc - 1; ++p) {
      for (int q = p + 1; q < nc; ++q) {
        cd* rp = row_of(wt, p, mw);
        cd* rq = row_of(wt, q, mw);
        const double app = k.dotc(rp, rp, mw).real();
        const double aqq = k.dotc(rq, rq, mw).real();
        if (app <= zero_floor) {
          for (int i = 0; i < mw; ++i) rp[i] = cd(0.0);
          continue;
        }
        if (aqq <= zero_floor) {
          for (int i = 0; i < mw; ++i) rq[i] = cd(0.0);
          continue;
        }
        const cd apq = k.dotc(rp, rq, mw);
        const double mag = std::abs(apq);
        const double rel = mag / (std::sqrt(app) * std::sqrt(aqq));
        worst = std::max(worst, rel);
        if (!(rel > 1e-15)) continue;
        // Diagonalize the 2x2 Hermitian Gram block [[app, apq], [conj, aqq]].
        const cd phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        // Columns (p, q) <- (p, q) * R with R = diag(1, conj(phase)) * J:
        // p' = cs*p - sn*ph*q, q' = sn*p + cs*ph*q.
        const cd ph = std::conj(phase);
        k.rot2(cd(cs), -sn * ph, cd(sn), cs * ph, rp, rq, mw);
        k.rot2(cd(cs), -sn * ph, cd(sn), cs * ph, row_of(vt, p, nc),
               row_of(vt, q, nc), nc);
      }
    }
    if (worst <= 1e-14) break;
  }

  std::vector<double> sig(nc);
  for (int p = 0; p < nc; ++p) {
    const cd* rp = row_of(wt, p, mw);
    double s2 = k.dotc(rp, rp, mw).real();
    sig[p] = (s2 <= zero_floor) ? 0.0 : std::sqrt(s2);
  }
  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sig[x] > sig[y]; });

  out.sigma.resize(nc);
  out.v = Matrix(nc, nc);
  for (int j = 0; j < nc; ++j) {
    const int src = order[j];
    out.sigma[j] = sig[src] * scale;
    for (int i = 0; i < nc; ++i) out.v(i, j) = vt(src, i);
  }
  return out;
}

double sigma_max(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  return jacobi_svd(a).sigma.front();
}

int numerical_rank(const Matrix& a, const Tolerances& tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  const Svd s = jacobi_svd(a);
  const double cut = tol.rank_tol * (s.sigma.empty() ? 0.0 : s.sigma[0]);
  int r = 0;
  for (double v : s.sigma)
    if (v > cut) ++r;
  return r;
}

Subspace nullspace_floored(const Matrix& m, const Tolerances& tol,
                           double scale_floor) {
  const int nc = m.cols();
  if (m.rows() == 0) return Subspace{nc, Matrix::identity(nc)};
  const Svd s = jacobi_svd(m);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma[0];
  const double cut = tol.rank_tol * std::max(smax, scale_floor);
  int first = 0;
  while (first < nc && s.sigma[first] > cut) ++first;
  Matrix basis(nc, nc - first);
  for (int j = first; j < nc; ++j)
    for (int i = 0; i < nc; ++i) basis(i, j - first) = s.v(i, j);
  return Subspace{nc, std::move(basis)};
}

Subspace nullspace(const Matrix& m, const Tolerances& tol) {
  return nullspace_floored(m, tol, 0.0);
}

Subspace range_basis(const Matrix& m, const Tolerances& tol) {
  const int nr = m.rows();
  if (nr == 0 || m.cols() == 0) return Subspace{nr, Matrix(nr, 0)};
  const Svd s = jacobi_svd(m);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma[0];
  const double cut = tol.rank_tol * smax;
  int r = 0;
  while (r < m.cols() && s.sigma[r] > cut) ++r;
  const Matrix av = m * s.v.block(0, 0, m.cols(), r);
  Matrix basis(nr, r);
  for (int j = 0; j < r; ++j) {
    const double inv = 1.0 / s.sigma[j];
    for (int i = 0; i < nr; ++i) basis(i, j) = av(i, j) * inv;
  }
  return Subspace{nr, std::move(basis)};
}

Subspace orthogonal_complement(const Subspace& b, int n,
                               const Tolerances& tol) {
  if (b.dim() == 0) return Subspace{n, Matrix::identity(n)};
  if (b.basis.rows() != n || b.ambient_dim != n)
    throw DimensionMismatch("basis vectors are not length n");
  return nullspace(b.basis.adjoint(), tol);
}

Matrix invertible_to_unitary(const Matrix& s, const Tolerances& tol) {
  if (!s.square()) throw DimensionMismatch("QR input must be square");
  const int n = s.rows();
  if (n == 0) return s;
  const double smax = sigma_max(s);
  const auto& k = kern::active();
  Matrix qt = to_column_rows(s);  // row j will become q_j
  for (int j = 0; j < n; ++j) {
    cd* v = qt.data() + static_cast<size_t>(j) * n;
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        const cd* qi = qt.data() + static_cast<size_t>(i) * n;
        const cd proj = k.dotc(qi, v, n);
        k.axpy(-proj, qi, v, n);
      }
    }
    const double r = std::sqrt(std::max(0.0, k.dotc(v, v, n).real()));
    if (r <= tol.rank_tol * smax)
      throw SingularMatrix("Gram-Schmidt pivot collapsed; matrix is singular");
    const double inv = 1.0 / r;
    for (int i = 0; i < n; ++i) v[i] *= inv;
  }
  return from_column_rows(qt);
}

Matrix inverse(const Matrix& a, const Tolerances& tol) {
  if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
  const int n = a.rows();
  Matrix lu = a;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const double floor = tol.rank_tol * std::max(a.max_abs(), 1e-300);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    double best = std::abs(lu(c, c));
    for (int i = c + 1; i < n; ++i) {
      const double v = std::abs(lu(i, c));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= floor) throw SingularMatrix("matrix is numerically singular");
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(lu(c, j), lu(piv, j));
      std::swap(perm[c], perm[piv]);
    }
    const cd inv_p = cd(1.0, 0.0) / lu(c, c);
    for (int i = c + 1; i < n; ++i) {
      const cd f = lu(i, c) * inv_p;
      lu(i, c) = f;
      for (int j = c + 1; j < n; ++j) lu(i, j) -= f * lu(c, j);
    }
  }
  Matrix x(n, n);
  std::vector<cd> col(n);
  for (int rhs = 0; rhs < n; ++rhs) {
    for (int i = 0; i < n; ++i) col[i] = (perm[i] == rhs) ? cd(1.0) : cd(0.0);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) col[i] -= lu(i, j) * col[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) col[i] -= lu(i, j) * col[j];
      col[i] /= lu(i, i);
    }
    for (int i = 0; i < n; ++i) x(i, rhs) = col[i];
  }
  return x;
}

namespace {

void hessenberg_reduce(Matrix& h) {
  const int n = h.rows();
  for (int kcol = 0; kcol + 2 < n; ++kcol) {
    double nx2 = 0.0;
    for (int i = kcol + 1; i < n; ++i) nx2 += std::norm(h(i, kcol));
    const double nx = std::sqrt(nx2);
    if (nx <= 1e-300) {
      for (int i = kcol + 2; i < n; ++i) h(i, kcol) = cd(0.0);
      continue;
    }
    const cd x0 = h(kcol + 1, kcol);
    const cd alpha =
        (std::abs(x0) == 0.0) ? cd(-nx, 0.0) : -(x0 / std::abs(x0)) * nx;
    std::vector<cd> v(n - kcol - 1);
    v[0] = x0 - alpha;
    for (int i = 1; i < n - kcol - 1; ++i) v[i] = h(kcol + 1 + i, kcol);
    double vn2 = 0.0;
    for (const cd& z : v) vn2 += std::norm(z);
    if (vn2 <= 1e-300) continue;
    const double inv = 1.0 / std::sqrt(vn2);
    for (cd& z : v) z *= inv;
    // H <- P H P with P = I - 2 v v^H on indices kcol+1..n-1.
    for (int j = kcol; j < n; ++j) {
      cd w(0.0);
      for (int i = 0; i < n - kcol - 1; ++i)
        w += std::conj(v[i]) * h(kcol + 1 + i, j);
      w *= 2.0;
      for (int i = 0; i < n - kcol - 1; ++i) h(kcol + 1 + i, j) -= v[i] * w;
    }
    for (int i = 0; i < n; ++i) {
      cd u(0.0);
      for (int j = 0; j < n - kcol - 1; ++j) u += h(i, kcol + 1 + j) * v[j];
      u *= 2.0;
      for (int j = 0; j < n - kcol - 1; ++j)
        h(i, kcol + 1 + j) -= u * std::conj(v[j]);
    }
    h(kcol + 1, kcol) = alpha;
    for (int i = kcol + 2; i < n; ++i) h(i, kcol) = cd(0.0);
  }
}

struct GivensRotation {
  double c;
  cd s;
};

GivensRotation make_givens(cd f, cd g) {
  const double af = std::abs(f), ag = std::abs(g);
  if (ag == 0.0) return {1.0, cd(0.0)};
  if (af == 0.0) return {0.0, std::conj(g) / ag};
  const double r = std::hypot(af, ag);
  return {af / r, (f / af) * (std::conj(g) / r)};
}

}  // namespace

std::vector<cd> eigenvalues(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("eigenvalues of non-square matrix");
  const int n = a.rows();
  std::vector<cd> eig(n, cd(0.0));
  if (n == 0) return eig;
  const double scale = a.max_abs();
  if (scale == 0.0) return eig;
  Matrix h = (cd(1.0 / scale)) * a;
  if (n == 1) return {h(0, 0) * scale};
  hessenberg_reduce(h);

  int hi = n - 1;
  int its = 0;
  int total = 0;
  const int max_total = 80 * n + 200;
  // Slightly generous deflation cutoff: subdiagonal entries of a semisimple
  // multiple eigenvalue sit at the roundoff floor and can hover just above a
  // bare-ulp threshold indefinitely.
  const double deflate = 8.0 * kUlp;
  while (hi >= 0) {
    int lo = hi;
    while (lo > 0) {
      const double s0 = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      const double s = (s0 == 0.0) ? 1.0 : s0;
      if (std::abs(h(lo, lo - 1)) <= deflate * s) {
        h(lo, lo - 1) = cd(0.0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (++total > max_total)
      throw ConvergenceFailure("eigenvalue iteration did not converge");
    ++its;

    cd shift;
    if (its % 16 == 0) {
      // exceptional shift to break cycling
      const double extra =
          std::abs(h(hi, hi - 1)) +
          (hi - 1 > lo ? std::abs(h(hi - 1, hi - 2)) : 0.0);
      shift = h(hi, hi) + cd(0.75 * extra, 0.0);
    } else {
      const cd ta = h(hi - 1, hi - 1), tb = h(hi - 1, hi);
      const cd tc = h(hi, hi - 1), td = h(hi, hi);
      const cd mid = (ta + td) * 0.5;
      const cd disc = std::sqrt(mid * mid - (ta * td - tb * tc));
      const cd mu1 = mid + disc, mu2 = mid - disc;
      shift = (std::abs(mu1 - td) < std::abs(mu2 - td)) ? mu1 : mu2;
    }

    for (int i = lo; i <= hi; ++i) h(i, i) -= shift;
    // QR step on the active window via Givens rotations.
    std::vector<GivensRotation> rots(hi - lo);
    for (int i = lo; i < hi; ++i) {
      const GivensRotation g = make_givens(h(i, i), h(i + 1, i));
      rots[i - lo] = g;
      kern::active().rot2(cd(g.c), g.s, -std::conj(g.s), cd(g.c), &h(i, i),
                          &h(i + 1, i), hi - i + 1);
      h(i + 1, i) = cd(0.0);
    }
    for (int i = lo; i < hi; ++i) {
      const GivensRotation g = rots[i - lo];
      const cd sc = std::conj(g.s);
      for (int r = lo; r <= i + 1; ++r) {
        const cd u = h(r, i), v = h(r, i + 1);
        h(r, i) = g.c * u + sc * v;
        h(r, i + 1) = -g.s * u + g.c * v;
      }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += shift;
  }

  for (cd& z : eig) z *= scale;
  std::sort(eig.begin(), eig.end(), lex_less);
  return eig;
}

Spectrum spectrum(const Matrix& c, const Tolerances& tol) {
  std::vector<cd> eig = eigenvalues(c);
  struct Cluster {
    cd sum;
    int count;
    cd rep() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  clusters.reserve(eig.size());
  for (const cd& z : eig) clusters.push_back({z, 1});

  bool merged = true;
  while (merged) {
    merged = false;
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster& a, const Cluster& b) {
                return lex_less(a.rep(), b.rep());
              });
    for (size_t i = 0; i + 1 < clusters.size() && !merged; ++i) {
      for (size_t j = i + 1; j < clusters.size(); ++j) {
        if (std::abs(clusters[i].rep() - clusters[j].rep()) <=
            tol.eig_cluster_tol) {
          clusters[i].sum += clusters[j].sum;
          clusters[i].count += clusters[j].count;
          clusters.erase(clusters.begin() + j);
          merged = true;
          break;
        }
      }
    }
  }

  Spectrum sp;
  for (const Cluster& cl : clusters) {
    sp.eigenvalues.push_back(cl.rep());
    sp.multiplicities.push_back(cl.count);
  }
  return sp;
}

std::vector<Subspace> generalized_eigenspaces(const Matrix& c,
                                              const Spectrum& sp,
                                              const Tolerances& tol) {
  if (!c.square()) throw DimensionMismatch("non-square matrix");
  const int n = c.rows();
  if (sp.total() != n)
    throw DimensionMismatch("spectrum does not match matrix dimension");
  std::vector<Subspace> out;
  out.reserve(sp.eigenvalues.size());
  for (size_t i = 0; i < sp.eigenvalues.size(); ++i) {
    const cd lambda = sp.eigenvalues[i];
    const int mult = sp.multiplicities[i];
    Matrix shifted = c;
    for (int d = 0; d < n; ++d) shifted(d, d) -= lambda;
    const double nrm = shifted.frobenius_norm();
    Subspace ker;
    if (nrm <= 1e-300) {
      // C is lambda * I
      ker = Subspace{n, Matrix::identity(n)};
    } else {
      shifted *= cd(1.0 / nrm);
      Matrix power = shifted;
      for (int p = 1; p < mult; ++p) power = power * shifted;
      ker = nullspace(power, tol);
    }
    if (ker.dim() != mult)
      throw DefectiveTolerance(
          "generalized eigenspace dimension disagrees with algebraic "
          "multiplicity; adjust eig_cluster_tol");
    out.push_back(std::move(ker));
  }
  return out;
}

}  // namespace sbd
