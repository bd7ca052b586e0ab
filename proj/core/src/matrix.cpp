#include "matgamma/matrix.hpp"

#include <cmath>
#include <string>

#include "matgamma/error.hpp"

namespace matgamma {

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) fail(ErrorCode::DimensionMismatch, "matrix order must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  if (!m.is_finite()) fail(ErrorCode::NonFiniteInput, "diagonal has non-finite entries");
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> d) {
  return diagonal(std::span<const Complex>(d.begin(), d.size()));
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      fail(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].size()) +
                                             " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  if (!m.is_finite()) fail(ErrorCode::NonFiniteInput, "matrix has NaN or Inf entries");
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::vector<std::vector<Complex>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

ComplexMatrix ComplexMatrix::from_data(std::size_t n, std::vector<Complex> data) {
  if (data.size() != n * n)
    fail(ErrorCode::DimensionMismatch, "buffer size does not match order");
  ComplexMatrix m(n);
  m.data_ = std::move(data);
  if (!m.is_finite()) fail(ErrorCode::NonFiniteInput, "matrix has NaN or Inf entries");
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix r(*this);
  for (auto& z : r.data_) z = std::conj(z);
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Complex> ComplexMatrix::diag() const {
  std::vector<Complex> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix ComplexMatrix::block(std::size_t begin, std::size_t size) const {
  ComplexMatrix r(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) r(i, j) = (*this)(begin + i, begin + j);
  return r;
}

std::vector<Complex> ComplexMatrix::rect(std::size_t r0, std::size_t rows, std::size_t c0,
                                         std::size_t cols) const {
  std::vector<Complex> out(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = (*this)(r0 + i, c0 + j);
  return out;
}

bool ComplexMatrix::is_finite() const noexcept {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool ComplexMatrix::is_upper_triangular() const noexcept {
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != Complex(0.0)) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.n_ != n_) fail(ErrorCode::DimensionMismatch, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.n_ != n_) fail(ErrorCode::DimensionMismatch, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::shift(Complex s) noexcept {
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) fail(ErrorCode::DimensionMismatch, "matrix product");
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator/(ComplexMatrix a, Complex s) { return a *= (1.0 / s); }

ComplexMatrix shifted(ComplexMatrix a, Complex s) { return std::move(a.shift(s)); }

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.order(), m = b.order();
  ComplexMatrix r(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r(n + i, n + j) = b(i, j);
  return r;
}

ComplexMatrix block_upper(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c) {
  const std::size_t n = a.order();
  if (b.order() != n || c.order() != n)
    fail(ErrorCode::DimensionMismatch, "block_upper needs equal orders");
  ComplexMatrix r(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = a(i, j);
      r(i, n + j) = b(i, j);
      r(n + i, n + j) = c(i, j);
    }
  return r;
}

}  // namespace matgamma
