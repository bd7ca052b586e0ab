#pragma once

#include <limits>
#include <vector>

#include "matgamma/matrix.hpp"

namespace matgamma {

/// Unit roundoff of binary64, 2^-53.
inline constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

/// A = U T U* with U unitary and T upper triangular.
struct SchurForm {
  ComplexMatrix U;
  ComplexMatrix T;
  /// ||A - U T U*||_F / ||A||_F measured at construction.
  double backtransform_error = 0.0;

  std::vector<Complex> eigenvalues() const { return T.diag(); }
  ComplexMatrix reconstruct() const;
};

struct Norms {
  double one_norm;
  double two_norm;
  double inf_norm;
  double fro_norm;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Solves A X = B by LU with partial pivoting. Throws ErrorCode::Singular
/// when a pivot falls below n * u * ||A||_1.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);

/// Complex Schur decomposition: Householder reduction to Hessenberg form
/// followed by shifted QR. Upper-triangular input is returned as-is with U = I.
/// Throws ErrorCode::NonConvergence after 30n QR sweeps.
SchurForm schur(const ComplexMatrix& a);

double spectral_abscissa(const ComplexMatrix& a);
double spectral_radius(const ComplexMatrix& a);
double spectral_abscissa(const SchurForm& s);
double spectral_radius(const SchurForm& s);

double one_norm(const ComplexMatrix& a);
double inf_norm(const ComplexMatrix& a);
double fro_norm(const ComplexMatrix& a);
/// sqrt(rho(A* A)) via power iteration (tol 1e-12, 1000 steps); falls back to
/// the Frobenius norm if the iteration stalls.
double two_norm(const ComplexMatrix& a);
Norms norms(const ComplexMatrix& a);

/// Solves the upper-triangular system T x = b in place (b overwritten).
void solve_upper_triangular(const ComplexMatrix& t, std::vector<Complex>& b);

}  // namespace matgamma
