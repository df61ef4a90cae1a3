#pragma once
// Dense complex matrix, row-major. The universal numeric carrier of the
// library: states, effects, unitaries and Choi matrices are all CMatrix
// underneath, with thin domain wrappers on top.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "povmduel/kernels.hpp"

namespace povmduel {

using cd = std::complex<double>;

class CMatrix {
 public:
  CMatrix() = default;
  // zero matrix
  CMatrix(std::size_t rows, std::size_t cols);
  // takes ownership of row-major entries; rejects wrong sizes and non-finite
  // values
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries);
  CMatrix(std::initializer_list<std::initializer_list<cd>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<cd>& d);
  static CMatrix outer(const std::vector<cd>& x, const std::vector<cd>& y);  // |x><y|

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return data_.size(); }

  cd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  cd* row(std::size_t i) { return data_.data() + i * cols_; }
  const cd* row(std::size_t i) const { return data_.data() + i * cols_; }
  cd* data() { return data_.data(); }
  const cd* data() const { return data_.data(); }
  const std::vector<cd>& entries() const { return data_; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cd scale);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cd scale) { return a *= scale; }
  friend CMatrix operator*(cd scale, CMatrix a) { return a *= scale; }

  CMatrix operator*(const CMatrix& other) const;   // matrix product
  std::vector<cd> operator*(const std::vector<cd>& v) const;

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;

  cd trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  // ||A - A^dagger||_F
  double hermiticity_residual() const;
  bool is_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

// Hilbert-Schmidt inner product Tr(A^dagger B); conjugate-linear in the first
// argument.
cd hs_inner(const CMatrix& a, const CMatrix& b);

}  // namespace povmduel
