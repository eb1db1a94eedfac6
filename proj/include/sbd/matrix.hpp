#pragma once

#include <cassert>
#include <complex>
#include <vector>

#include "sbd/errors.hpp"

namespace sbd {

using cd = std::complex<double>;

// Dense complex matrix, row-major. Zero-sized shapes are allowed so that
// empty subspace bases and trivial blocks compose without special cases;
// file inputs are validated to be at least 1x1 with finite entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix shape");
  }
  Matrix(int rows, int cols, std::vector<cd> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 0 || cols < 0 || data_.size() != static_cast<size_t>(rows) * cols)
      throw DimensionMismatch("entry count does not match matrix shape");
    if (!is_finite())
      throw std::invalid_argument("matrix entries must be finite");
  }

  static Matrix identity(int n);
  static Matrix zeros(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  cd& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const cd& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  cd* data() { return data_.data(); }
  const cd* data() const { return data_.data(); }
  const std::vector<cd>& entries() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;

  Matrix block(int i0, int j0, int nrows, int ncols) const;
  void set_block(int i0, int j0, const Matrix& b);
  Matrix col(int j) const { return block(0, j, rows_, 1); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cd s);

  double max_abs() const;
  double frobenius_norm() const;
  bool is_finite() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cd> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cd s, const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Horizontal / vertical concatenation; empty blocks are skipped.
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);

Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace sbd
