#pragma once

#include "matgamma/matrix.hpp"

namespace matgamma {

/// Matrix exponential by scaling and squaring with diagonal Pade approximants
/// of degree 3..13 selected from the 1-norm. Triangular inputs get their
/// diagonal and first superdiagonal recomputed exactly at every squaring.
/// Throws ErrorCode::Overflow when the result is not representable.
ComplexMatrix expm(const ComplexMatrix& a);

/// Principal logarithm by inverse scaling and squaring: Schur form, repeated
/// triangular square roots until ||T^(1/2^k) - I||_1 <= 0.25, then a [7/7]
/// Pade approximant in partial-fraction form.
/// Throws ErrorCode::BranchCut for eigenvalues on the closed negative real axis.
ComplexMatrix logm(const ComplexMatrix& a);

/// Principal square root of an upper-triangular matrix (Bjorck-Hammarling).
ComplexMatrix sqrtm_triangular(const ComplexMatrix& t);

/// t^M = exp(M log t), t > 0.
ComplexMatrix power_scalar_matrix(double t, const ComplexMatrix& m);

/// A^B = exp(log(A) B).
ComplexMatrix power_matrix_matrix(const ComplexMatrix& a, const ComplexMatrix& b);

/// sin(A) = (e^{iA} - e^{-iA}) / 2i
ComplexMatrix sinm(const ComplexMatrix& a);
/// cos(A) = (e^{iA} + e^{-iA}) / 2
ComplexMatrix cosm(const ComplexMatrix& a);

/// True if z lies on the closed negative real axis, with tolerance
/// |Im z| <= 1e-12 (1 + |z|).
bool on_negative_real_axis(Complex z) noexcept;

}  // namespace matgamma
