// AVX2/FMA variants of the dense complex kernels. Two complex doubles per
// 256-bit vector, interleaved (re, im). Compiled with -mavx2 -mfma; only
// reachable through avx2_ops() after the cpuid check.

#include "sbd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace sbd::kern {
namespace {

// (are + i*aim) * b for two packed complexes; are/aim broadcast.
inline __m256d cmul_broadcast(__m256d are, __m256d aim, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  const __m256d t = _mm256_mul_pd(aim, bswap);
  return _mm256_fmaddsub_pd(are, b, t);
}

void matmul_avx2(const cd* a, const cd* b, cd* c, int m, int k, int n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cdp = reinterpret_cast<double*>(c);
  const int n2 = n - (n & 1);
  for (int i = 0; i < m; ++i) {
    double* crow = cdp + 2l * i * n;
    for (int j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    const cd* arow = a + static_cast<long>(i) * k;
    for (int l = 0; l < k; ++l) {
      const cd al = arow[l];
      if (al.real() == 0.0 && al.imag() == 0.0) continue;
      const __m256d are = _mm256_set1_pd(al.real());
      const __m256d aim = _mm256_set1_pd(al.imag());
      const double* brow = bd + 2l * l * n;
      int j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j,
                         _mm256_add_pd(cv, cmul_broadcast(are, aim, bv)));
      }
      if (j < n) {
        cd* ctail = c + static_cast<long>(i) * n + j;
        *ctail += al * b[static_cast<long>(l) * n + j];
      }
    }
  }
}

cd dotc_avx2(const cd* x, const cd* y, int n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_a = _mm256_setzero_pd();
  __m256d acc_b = _mm256_setzero_pd();
  const int n2 = n - (n & 1);
  int i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_a = _mm256_fmadd_pd(xv, yv, acc_a);
    acc_b = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_b);
  }
  const __m128d a_lo = _mm256_castpd256_pd128(acc_a);
  const __m128d a_hi = _mm256_extractf128_pd(acc_a, 1);
  const __m128d a_s = _mm_add_pd(a_lo, a_hi);
  const __m128d b_lo = _mm256_castpd256_pd128(acc_b);
  const __m128d b_hi = _mm256_extractf128_pd(acc_b, 1);
  const __m128d b_s = _mm_add_pd(b_lo, b_hi);
  double abuf[2], bbuf[2];
  _mm_storeu_pd(abuf, a_s);
  _mm_storeu_pd(bbuf, b_s);
  double re = abuf[0] + abuf[1];
  double im = bbuf[1] - bbuf[0];
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return cd(re, im);
}

void axpy_avx2(cd alpha, const cd* x, cd* y, int n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const int n2 = n - (n & 1);
  int i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i,
                     _mm256_add_pd(yv, cmul_broadcast(are, aim, xv)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void rot2_avx2(cd a11, cd a12, cd a21, cd a22, cd* x, cd* y, int n) {
  double* xd = reinterpret_cast<double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d r11 = _mm256_set1_pd(a11.real()), i11 = _mm256_set1_pd(a11.imag());
  const __m256d r12 = _mm256_set1_pd(a12.real()), i12 = _mm256_set1_pd(a12.imag());
  const __m256d r21 = _mm256_set1_pd(a21.real()), i21 = _mm256_set1_pd(a21.imag());
  const __m256d r22 = _mm256_set1_pd(a22.real()), i22 = _mm256_set1_pd(a22.imag());
  const int n2 = n - (n & 1);
  int i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d xn = _mm256_add_pd(cmul_broadcast(r11, i11, xv),
                                     cmul_broadcast(r12, i12, yv));
    const __m256d yn = _mm256_add_pd(cmul_broadcast(r21, i21, xv),
                                     cmul_broadcast(r22, i22, yv));
    _mm256_storeu_pd(xd + 2 * i, xn);
    _mm256_storeu_pd(yd + 2 * i, yn);
  }
  for (; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = a11 * xi + a12 * yi;
    y[i] = a21 * xi + a22 * yi;
  }
}

double max_abs2_avx2(const cd* x, int n) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  const int n2 = n - (n & 1);
  int i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d sq = _mm256_mul_pd(xv, xv);
    const __m256d s = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
    acc = _mm256_max_pd(acc, s);
  }
  double buf[4];
  _mm256_storeu_pd(buf, acc);
  double m = buf[0];
  for (int j = 1; j < 4; ++j)
    if (buf[j] > m) m = buf[j];
  for (; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double a = re * re + im * im;
    if (a > m) m = a;
  }
  return m;
}

const Ops avx2_impl = {matmul_avx2, dotc_avx2, axpy_avx2, rot2_avx2,
                       max_abs2_avx2};

}  // namespace

const Ops* avx2_ops() {
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &avx2_impl;
  return nullptr;
}

}  // namespace sbd::kern

#endif  // x86_64
