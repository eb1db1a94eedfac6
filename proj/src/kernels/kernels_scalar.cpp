#include "sbd/kernels.hpp"

namespace sbd::kern {
namespace {

void matmul_scalar(const cd* a, const cd* b, cd* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    cd* crow = c + static_cast<long>(i) * n;
    for (int j = 0; j < n; ++j) crow[j] = cd(0.0, 0.0);
    const cd* arow = a + static_cast<long>(i) * k;
    for (int l = 0; l < k; ++l) {
      const cd al = arow[l];
      if (al.real() == 0.0 && al.imag() == 0.0) continue;
      const cd* brow = b + static_cast<long>(l) * n;
      for (int j = 0; j < n; ++j) crow[j] += al * brow[j];
    }
  }
}

cd dotc_scalar(const cd* x, const cd* y, int n) {
  double re = 0.0, im = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return cd(re, im);
}

void axpy_scalar(cd alpha, const cd* x, cd* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rot2_scalar(cd a11, cd a12, cd a21, cd a22, cd* x, cd* y, int n) {
  for (int i = 0; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = a11 * xi + a12 * yi;
    y[i] = a21 * xi + a22 * yi;
  }
}

double max_abs2_scalar(const cd* x, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double a = re * re + im * im;
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

const Ops scalar_ops = {matmul_scalar, dotc_scalar, axpy_scalar, rot2_scalar,
                        max_abs2_scalar};

}  // namespace sbd::kern
