#include "povmduel/cmatrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace povmduel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cd(0.0, 0.0)) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, "CMatrix: entry count does not match rows*cols");
  require(is_finite(), "CMatrix: non-finite entry");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cd>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require(is_finite(), "CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<cd>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::outer(const std::vector<cd>& x, const std::vector<cd>& y) {
  CMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "CMatrix: shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "CMatrix: shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cd scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
  require(cols_ == other.rows_, "CMatrix: shape mismatch in product");
  CMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const cd* arow = row(i);
    cd* orow = out.row(i);
    for (std::size_t l = 0; l < cols_; ++l) {
      if (arow[l] != cd(0.0, 0.0)) kernels::axpy(other.cols_, arow[l], other.row(l), orow);
    }
  }
  return out;
}

std::vector<cd> CMatrix::operator*(const std::vector<cd>& v) const {
  require(cols_ == v.size(), "CMatrix: shape mismatch in matrix-vector product");
  std::vector<cd> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = kernels::dotu(cols_, row(i), v.data());
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

CMatrix CMatrix::conj() const {
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
  return out;
}

cd CMatrix::trace() const {
  require(is_square(), "CMatrix: trace of non-square matrix");
  cd t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::hermiticity_residual() const {
  require(is_square(), "CMatrix: hermiticity of non-square matrix");
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

bool CMatrix::is_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

cd hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return kernels::dotc(a.size(), a.data(), b.data());
}

}  // namespace povmduel
