#pragma once

#include <complex>

#include "matgamma/gamma_core.hpp"
#include "matgamma/matrix.hpp"

namespace matgamma::harness {

/// Scalar gamma in extended precision: upward recurrence to |z| >= 20, a
/// Stirling series there, reflection for Re z < 1/2.
std::complex<long double> gamma_reference(std::complex<long double> z);

inline constexpr double kOracleMaxEigenvectorCond = 1e6;

/// V diag(Gamma(lambda)) V^{-1} from the Schur vectors and the eigenvectors of
/// the triangular factor. Throws ErrorCode::Refused for matrices that are
/// defective to working precision or whose eigenvector matrix has 2-norm
/// condition number above 1e6.
ComplexMatrix oracle_gamma(const ComplexMatrix& a);

/// kappa_2 of the normalized eigenvector matrix; throws Refused when defective.
double eigenvector_condition(const ComplexMatrix& a);

struct Reference {
  ComplexMatrix value;
  /// False when the oracle refused and the consensus medoid of the three
  /// backends was used instead.
  bool from_oracle = true;
};

Reference reference_gamma(const ComplexMatrix& a);

}  // namespace matgamma::harness
