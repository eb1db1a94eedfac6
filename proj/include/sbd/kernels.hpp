#pragma once

#include <complex>

namespace sbd::kern {

using cd = std::complex<double>;

// Dense complex double-precision primitives. Every entry point has a scalar
// reference implementation plus SIMD variants selected once at startup; the
// variants are interchangeable (equivalence-tested against the reference).
struct Ops {
  // C = A * B with A m-by-k, B k-by-n, C m-by-n, all row-major. C is
  // overwritten.
  void (*matmul)(const cd* a, const cd* b, cd* c, int m, int k, int n);
  // sum_i conj(x[i]) * y[i]
  cd (*dotc)(const cd* x, const cd* y, int n);
  // y += alpha * x
  void (*axpy)(cd alpha, const cd* x, cd* y, int n);
  // (x, y) <- (a11*x + a12*y, a21*x + a22*y), elementwise; the inner loop of
  // Jacobi and Givens rotations.
  void (*rot2)(cd a11, cd a12, cd a21, cd a22, cd* x, cd* y, int n);
  // max_i |x[i]|^2 computed as re^2 + im^2 (entries assumed moderate scale)
  double (*max_abs2)(const cd* x, int n);
};

extern const Ops scalar_ops;

// Null when the instruction set is unavailable on this machine or the build.
const Ops* avx2_ops();
const Ops* neon_ops();

// Runtime-selected implementation. Set SBD_FORCE_SCALAR=1 in the environment
// to pin the scalar path.
const Ops& active();
const char* active_name();

}  // namespace sbd::kern
