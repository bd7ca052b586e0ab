#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace matgamma {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// n x n zero matrix; n must be positive.
  explicit ComplexMatrix(std::size_t n);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n); }
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix diagonal(std::initializer_list<Complex> d);
  /// Validated construction: rows must form a square array of finite values.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Validated construction from a row-major buffer of n*n entries.
  static ComplexMatrix from_data(std::size_t n, std::vector<Complex> data);

  std::size_t order() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * n_ + j];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  std::vector<Complex> diag() const;

  /// Square sub-block rows/cols [begin, begin + size).
  ComplexMatrix block(std::size_t begin, std::size_t size) const;
  /// General sub-block [r0, r0+rows) x [c0, c0+cols) as a row-major vector.
  std::vector<Complex> rect(std::size_t r0, std::size_t rows, std::size_t c0,
                            std::size_t cols) const;

  bool is_finite() const noexcept;
  bool is_upper_triangular() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s) noexcept;
  /// Adds s to every diagonal entry.
  ComplexMatrix& shift(Complex s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator/(ComplexMatrix a, Complex s);

/// a + s I
ComplexMatrix shifted(ComplexMatrix a, Complex s);

/// Block-diagonal diag(a, b).
ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b);
/// [[a, b], [0, c]] with equal orders.
ComplexMatrix block_upper(const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& c);

}  // namespace matgamma
