#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "matgamma/matrix.hpp"

namespace matgamma {

enum class GammaMethod { Lanczos, Spouge, Reciprocal };

inline constexpr GammaMethod kAllMethods[] = {GammaMethod::Lanczos, GammaMethod::Spouge,
                                              GammaMethod::Reciprocal};

/// "lanczos" | "spouge" | "recip"
std::string_view to_string(GammaMethod method) noexcept;
/// Throws ErrorCode::MalformedInput for any other string.
GammaMethod parse_method(std::string_view text);

/// Eigenvalues closer than this to 0, -1, -2, ... are rejected.
inline constexpr double kPoleTolerance = 1e-8;
/// Real parts within this of zero count as the right half-plane.
inline constexpr double kImaginaryAxisTolerance = 1e-12;

/// Throws ErrorCode::PoleProximity naming the first offending eigenvalue.
void check_poles(std::span<const Complex> eigenvalues);

/// Eigenvalues of a general matrix, read off the diagonal when triangular.
std::vector<Complex> eigenvalues_of(const ComplexMatrix& a);

/// Gamma(A) by the matrix Lanczos formula (alpha = 9, m = 10).
/// Requires Re(lambda) > 0 for every eigenvalue.
ComplexMatrix lanczos_gamma_right(const ComplexMatrix& a);
/// Lanczos with reflection Gamma(A) = pi (sin(pi A) Gamma(I - A))^{-1} when
/// Re(trace A) < 0. The spectrum must lie on one side of the imaginary axis.
ComplexMatrix lanczos_gamma(const ComplexMatrix& a);

/// Gamma(A) by the matrix Spouge formula (a = 12.5, m = 12).
ComplexMatrix spouge_gamma_right(const ComplexMatrix& a);
ComplexMatrix spouge_gamma(const ComplexMatrix& a);

/// Reciprocal gamma series (50 terms, mu = 3) with the Gauss multiplication
/// formula for rho(A) > 3, then inverted. Accepts spectra on both sides.
ComplexMatrix reciprocal_gamma(const ComplexMatrix& a);

/// Number of Gauss multiplication factors r = ceil((rho - 1) / (mu - 1)), or 1
/// when rho <= mu.
int gauss_split_count(double rho, double mu = 3.0);

/// sum_k coeffs[k] A^k by Horner's rule.
ComplexMatrix polyval_matrix(std::span<const double> coeffs, const ComplexMatrix& a);

/// Dispatches to lanczos_gamma, spouge_gamma or reciprocal_gamma.
ComplexMatrix gamma_backend(const ComplexMatrix& a, GammaMethod method);

}  // namespace matgamma
