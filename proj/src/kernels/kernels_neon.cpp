// NEON variants for aarch64: one complex double per 128-bit vector.

#include "sbd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace sbd::kern {
namespace {

// sign mask (-1, +1) turns a*conj-swap products into a complex multiply.
inline float64x2_t cmul(float64x2_t a_re, float64x2_t a_im, float64x2_t b) {
  static const float64x2_t sign = {-1.0, 1.0};
  const float64x2_t bswap = vextq_f64(b, b, 1);
  const float64x2_t t = vmulq_f64(a_im, bswap);
  return vfmaq_f64(vmulq_f64(a_re, b), t, sign);
}

void matmul_neon(const cd* a, const cd* b, cd* c, int m, int k, int n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cdp = reinterpret_cast<double*>(c);
  for (int i = 0; i < m; ++i) {
    double* crow = cdp + 2l * i * n;
    for (int j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    const cd* arow = a + static_cast<long>(i) * k;
    for (int l = 0; l < k; ++l) {
      const cd al = arow[l];
      if (al.real() == 0.0 && al.imag() == 0.0) continue;
      const float64x2_t are = vdupq_n_f64(al.real());
      const float64x2_t aim = vdupq_n_f64(al.imag());
      const double* brow = bd + 2l * l * n;
      for (int j = 0; j < n; ++j) {
        const float64x2_t bv = vld1q_f64(brow + 2 * j);
        const float64x2_t cv = vld1q_f64(crow + 2 * j);
        vst1q_f64(crow + 2 * j, vaddq_f64(cv, cmul(are, aim, bv)));
      }
    }
  }
}

cd dotc_neon(const cd* x, const cd* y, int n) {
  double re = 0.0, im = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return cd(re, im);
}

void axpy_neon(cd alpha, const cd* x, cd* y, int n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const float64x2_t are = vdupq_n_f64(alpha.real());
  const float64x2_t aim = vdupq_n_f64(alpha.imag());
  for (int i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    const float64x2_t yv = vld1q_f64(yd + 2 * i);
    vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul(are, aim, xv)));
  }
}

void rot2_neon(cd a11, cd a12, cd a21, cd a22, cd* x, cd* y, int n) {
  for (int i = 0; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = a11 * xi + a12 * yi;
    y[i] = a21 * xi + a22 * yi;
  }
}

double max_abs2_neon(const cd* x, int n) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double a = re * re + im * im;
    if (a > m) m = a;
  }
  return m;
}

const Ops neon_impl = {matmul_neon, dotc_neon, axpy_neon, rot2_neon,
                       max_abs2_neon};

}  // namespace

const Ops* neon_ops() { return &neon_impl; }

}  // namespace sbd::kern

#endif  // __aarch64__
