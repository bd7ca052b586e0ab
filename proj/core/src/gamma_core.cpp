#include "matgamma/gamma_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "matgamma/error.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/log.hpp"
#include "matgamma/matfun.hpp"
#include "matgamma/scalar_gamma.hpp"

namespace matgamma {
namespace {

constexpr double kMu = 3.0;
constexpr int kRecipTerms = 50;

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

enum class Side { Right, Left };

Side spectrum_side(std::span<const Complex> eig, const char* who) {
  bool any_left = false;
  bool any_right = false;
  for (const Complex& z : eig) {
    if (z.real() < -kImaginaryAxisTolerance)
      any_left = true;
    else
      any_right = true;
  }
  if (any_left && any_right)
    fail(ErrorCode::Precondition,
         std::string(who) + ": spectrum straddles the imaginary axis; use the Schur-Parlett driver");
  return any_left ? Side::Left : Side::Right;
}

void require_right(std::span<const Complex> eig, const char* who) {
  for (const Complex& z : eig)
    if (z.real() < -kImaginaryAxisTolerance)
      fail(ErrorCode::Precondition,
           std::string(who) + " needs Re(lambda) > 0, found eigenvalue " + describe(z));
}

// c0 I + sum_k c_k (A + (k-1) I)^{-1}
ComplexMatrix partial_fraction_sum(const ComplexMatrix& a, std::span<const double> c) {
  const std::size_t n = a.order();
  ComplexMatrix s = ComplexMatrix::identity(n) * c[0];
  const ComplexMatrix id = ComplexMatrix::identity(n);
  for (std::size_t k = 1; k < c.size(); ++k)
    s += solve(shifted(a, double(k) - 1.0), id) * c[k];
  return s;
}

// exp(0.5 log(2 pi) I + (A - 0.5 I) log(A + shift I) - (A + shift I) + log S)
ComplexMatrix log_form(const ComplexMatrix& a, double shift, const ComplexMatrix& s) {
  const std::size_t n = a.order();
  const ComplexMatrix base = shifted(a, shift);
  ComplexMatrix l = ComplexMatrix::identity(n) * (0.5 * std::log(2.0 * std::numbers::pi));
  l += shifted(a, -0.5) * logm(base);
  l -= base;
  l += logm(s);
  return expm(l);
}

// pi (sin(pi A) Gamma_right(I - A))^{-1}
template <class Right>
ComplexMatrix reflect(const ComplexMatrix& a, Right right) {
  const std::size_t n = a.order();
  const ComplexMatrix s = sinm(a * std::numbers::pi);
  const ComplexMatrix g = right(shifted(-a, 1.0));
  return solve(s * g, ComplexMatrix::identity(n) * std::numbers::pi);
}

}  // namespace

std::string_view to_string(GammaMethod method) noexcept {
  switch (method) {
    case GammaMethod::Lanczos: return "lanczos";
    case GammaMethod::Spouge: return "spouge";
    case GammaMethod::Reciprocal: return "recip";
  }
  return "unknown";
}

GammaMethod parse_method(std::string_view text) {
  for (GammaMethod m : kAllMethods)
    if (text == to_string(m)) return m;
  fail(ErrorCode::MalformedInput,
       "unknown method '" + std::string(text) + "' (expected lanczos, spouge or recip)");
}

void check_poles(std::span<const Complex> eigenvalues) {
  for (const Complex& z : eigenvalues) {
    const double k = std::round(z.real());
    if (k <= 0.0 && std::abs(z - Complex(k, 0.0)) < kPoleTolerance)
      fail(ErrorCode::PoleProximity, "eigenvalue " + describe(z) + " is within 1e-8 of the pole " +
                                         std::to_string(static_cast<long long>(k)));
  }
}

std::vector<Complex> eigenvalues_of(const ComplexMatrix& a) {
  if (a.is_upper_triangular()) return a.diag();
  return schur(a).eigenvalues();
}

ComplexMatrix lanczos_gamma_right(const ComplexMatrix& a) {
  const auto eig = eigenvalues_of(a);
  require_right(eig, "lanczos_gamma_right");
  check_poles(eig);
  const auto& c = coefficient_table().lanczos_c;
  return log_form(a, kLanczosAlpha - 0.5, partial_fraction_sum(a, c));
}

ComplexMatrix lanczos_gamma(const ComplexMatrix& a) {
  const auto eig = eigenvalues_of(a);
  check_poles(eig);
  spectrum_side(eig, "lanczos_gamma");
  if (a.trace().real() >= 0.0) return lanczos_gamma_right(a);
  return reflect(a, lanczos_gamma_right);
}

ComplexMatrix spouge_gamma_right(const ComplexMatrix& a) {
  const auto eig = eigenvalues_of(a);
  require_right(eig, "spouge_gamma_right");
  check_poles(eig);
  const auto& d = coefficient_table().spouge_d;
  return log_form(a, kSpougeA - 1.0, partial_fraction_sum(a, d));
}

ComplexMatrix spouge_gamma(const ComplexMatrix& a) {
  const auto eig = eigenvalues_of(a);
  check_poles(eig);
  spectrum_side(eig, "spouge_gamma");
  if (a.trace().real() >= 0.0) return spouge_gamma_right(a);
  return reflect(a, spouge_gamma_right);
}

int gauss_split_count(double rho, double mu) {
  if (rho <= mu) return 1;
  return static_cast<int>(std::ceil((rho - 1.0) / (mu - 1.0)));
}

ComplexMatrix polyval_matrix(std::span<const double> coeffs, const ComplexMatrix& a) {
  const std::size_t n = a.order();
  if (coeffs.empty()) return ComplexMatrix::zeros(n);
  std::size_t k = coeffs.size() - 1;
  ComplexMatrix p = ComplexMatrix::identity(n) * coeffs[k];
  if (k == 0) return p;
  p = a * coeffs[k];
  p.shift(coeffs[k - 1]);
  for (k = k - 1; k-- > 0;) {
    p = p * a;
    p.shift(coeffs[k]);
  }
  return p;
}

ComplexMatrix reciprocal_gamma(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  const auto eig = eigenvalues_of(a);
  check_poles(eig);
  double rho = 0.0;
  for (const Complex& z : eig) rho = std::max(rho, std::abs(z));

  const auto& table = coefficient_table().recip_a;
  const std::span<const double> coeffs(table.data(), kRecipTerms + 1);

  const int r = gauss_split_count(rho, kMu);
  ComplexMatrix delta;
  if (r == 1) {
    delta = polyval_matrix(coeffs, a);
  } else {
    const double inv_r = 1.0 / r;
    delta = polyval_matrix(coeffs, a * inv_r);
    for (int p = 1; p < r; ++p) delta = delta * polyval_matrix(coeffs, shifted(a, double(p)) * inv_r);
    delta = delta * power_scalar_matrix(double(r), shifted(-a, 0.5));
    delta *= std::pow(2.0 * std::numbers::pi, 0.5 * (r - 1));
  }
  ComplexMatrix g;
  try {
    g = solve(delta, ComplexMatrix::identity(n));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular)
      fail(ErrorCode::PoleProximity,
           "reciprocal_gamma: 1/Gamma(A) is numerically singular (eigenvalue too near a pole)");
    throw;
  }
  const double kappa = one_norm(delta) * one_norm(g);
  if (kappa > 1e12) {
    std::ostringstream os;
    os << "reciprocal_gamma: kappa_1(1/Gamma(A)) = " << kappa << " exceeds 1e12";
    warn(os.str());
  }
  return g;
}

ComplexMatrix gamma_backend(const ComplexMatrix& a, GammaMethod method) {
  switch (method) {
    case GammaMethod::Lanczos: return lanczos_gamma(a);
    case GammaMethod::Spouge: return spouge_gamma(a);
    case GammaMethod::Reciprocal: return reciprocal_gamma(a);
  }
  fail(ErrorCode::Internal, "unhandled gamma method");
}

}  // namespace matgamma
