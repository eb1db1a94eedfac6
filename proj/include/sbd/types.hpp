#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sbd/matrix.hpp"

namespace sbd {

// Numerical cutoffs used throughout. rank_tol is relative to the largest
// singular value; residual_tol is an absolute bound on entries that a block
// structure requires to be zero; eig_cluster_tol is the absolute radius for
// merging near-equal eigenvalues.
struct Tolerances {
  double rank_tol = 1e-10;
  double residual_tol = 1e-8;
  double eig_cluster_tol = 1e-7;

  void validate() const {
    auto ok = [](double t) { return t > 0.0 && t < 1.0; };
    if (!ok(rank_tol) || !ok(residual_tol) || !ok(eig_cluster_tol))
      throw std::invalid_argument(
          "tolerances must be strictly positive and < 1");
  }
  Tolerances tightened(double factor) const {
    Tolerances t = *this;
    t.rank_tol *= factor;
    return t;
  }
};

// Distinct eigenvalues after clustering, with algebraic multiplicities,
// ordered by (real, imag) ascending.
struct Spectrum {
  std::vector<cd> eigenvalues;
  std::vector<int> multiplicities;

  int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
  int total() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  }
};

// A subspace of C^n held as an orthonormal n-by-d basis (d may be 0).
struct Subspace {
  int ambient_dim = 0;
  Matrix basis;

  int dim() const { return basis.cols(); }
};

struct SearchConfig {
  std::uint64_t rng_seed = 0;
  int n_seed_combinations = 8;
  int max_orbit_rounds = 0;  // 0 means "ambient dimension"
  bool exhaustive_dim_one = true;
};

enum class BlockKind { BT, BD };

struct BlockPartition {
  std::vector<int> sizes;
  BlockKind kind = BlockKind::BT;

  int total() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
  }
  int count() const { return static_cast<int>(sizes.size()); }
};

// Basis-change matrix S with cached inverse; transformed matrices are
// S^-1 A S. For unitary S the inverse is the conjugate transpose.
struct Transform {
  Matrix s;
  Matrix s_inv;
  bool unitary = false;
};

struct Provenance {
  char algorithm = 'A';
  std::uint64_t seed = 0;
  int trials = 0;
  // Algorithms A and B
  std::vector<int> chain;
  bool final_block_certified = false;
  bool chain_minimal_certified = false;
  int gamma_size = 0;  // B only
  // Algorithm C
  int commutant_dim = 0;
  Matrix commuting_matrix;
  Spectrum commuting_spectrum;
};

struct DecompositionReport {
  Transform transform;
  BlockPartition partition;
  std::vector<Matrix> transformed;
  std::vector<double> residuals;  // per input matrix, input order
  Provenance provenance;
};

// Deterministic uniform deviates; identical sequences on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double symmetric() { return 2.0 * unit() - 1.0; }  // [-1, 1)
  cd complex_unit_square() { return cd(unit(), unit()); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sbd
