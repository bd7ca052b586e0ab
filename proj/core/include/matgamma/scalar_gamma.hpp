#pragma once

#include <array>
#include <complex>
#include <vector>

#include "matgamma/matrix.hpp"

namespace matgamma {

/// Unevaluated sum hi + lo carrying ~32 significant digits.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
  long double value() const noexcept { return static_cast<long double>(hi) + lo; }
};

inline constexpr int kLanczosTerms = 10;   // m, with alpha = 9
inline constexpr double kLanczosAlpha = 9.0;
inline constexpr int kSpougeTerms = 12;    // m = ceil(a) - 1
inline constexpr double kSpougeA = 12.5;
inline constexpr int kRecipStored = 51;
inline constexpr int kZetaMax = 60;

/// Published Lanczos c_k(9), k = 0..10, and Spouge d_k(12.5), k = 0..12,
/// at extended precision.
const std::array<long double, kLanczosTerms + 1>& lanczos_table();
const std::array<long double, kSpougeTerms + 1>& spouge_table();

/// Immutable constants consumed by the gamma kernels. Built once on first use.
struct CoefficientTable {
  std::array<double, kLanczosTerms + 1> lanczos_c;
  std::array<double, kSpougeTerms + 1> spouge_d;
  /// recip_a[k] = a_k of 1/Gamma(z) = sum a_k z^k, k = 0..51 (a_0 = 0).
  std::vector<double> recip_a;
  /// zeta[s] for s = 2..60 (entries 0 and 1 unused, set to NaN).
  std::vector<double> zeta;
};

const CoefficientTable& coefficient_table();

/// Euler-Mascheroni constant.
DoubleDouble euler_gamma_dd() noexcept;
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Gamma(z + 1) by the Lanczos approximation (alpha = 9, m = 10), evaluated in
/// logarithmic form. Requires Re z > -1.
Complex lanczos_gamma_scalar(Complex z);

/// Gamma(z) by Spouge's approximation with a = 12.5. Requires Re z > 0.
Complex spouge_gamma_scalar(Complex z);

/// d_k(a) = (2 pi)^{-1/2} (-1)^{k-1} / (k-1)! (a - k)^{k - 1/2} e^{a - k},
/// for 1 <= k <= ceil(a) - 1 and a >= 3.
double spouge_coefficient(int k, double a);
long double spouge_coefficient_ld(int k, long double a);

/// a_1..a_m of the reciprocal gamma Taylor series from the zeta recursion,
/// carried out in 320-bit arithmetic and rounded. 2 <= m <= 61.
std::vector<double> recip_coefficients(int m);

/// Riemann zeta at integers 2 <= s <= 60 from the embedded table.
double zeta(int s);
DoubleDouble zeta_dd(int s);
/// Independent double-double Euler-Maclaurin evaluation, for self-checks.
DoubleDouble zeta_euler_maclaurin(int s);

/// Gamma(s, r) = int_r^inf e^{-t} t^{s-1} dt for real s and r > 0.
double incomplete_gamma_upper_scalar(double s, double r);
/// gamma(s, r) = int_0^r e^{-t} t^{s-1} dt for s > 0, r > 0.
double incomplete_gamma_lower_scalar(double s, double r);

}  // namespace matgamma
