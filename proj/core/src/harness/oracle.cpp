#include "matgamma/harness/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "matgamma/error.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/schur_parlett.hpp"

namespace matgamma::harness {
namespace {

using cld = std::complex<long double>;

// B_{2k} / (2k (2k - 1)), k = 1..10
constexpr std::array<long double, 10> kStirling = {
    1.0L / 12.0L,          -1.0L / 360.0L,          1.0L / 1260.0L,          -1.0L / 1680.0L,
    1.0L / 1188.0L,        -691.0L / 360360.0L,     1.0L / 156.0L,           -3617.0L / 122400.0L,
    43867.0L / 244188.0L,  -174611.0L / 125400.0L};

cld log_gamma_stirling(cld w) {
  const long double half_log_2pi = 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  cld s = (w - 0.5L) * std::log(w) - w + half_log_2pi;
  const cld inv = 1.0L / w;
  const cld inv2 = inv * inv;
  cld p = inv;
  for (long double b : kStirling) {
    s += b * p;
    p *= inv2;
  }
  return s;
}

// sin(pi z) with the real part reduced first.
cld sin_pi(cld z) {
  const long double k = std::round(z.real());
  const cld r = (z - k) * std::numbers::pi_v<long double>;
  const cld s = std::sin(r);
  return std::fmod(std::abs(k), 2.0L) == 1.0L ? -s : s;
}

struct Eigensystem {
  ComplexMatrix v;
  std::vector<Complex> lambda;
};

Eigensystem eigensystem(const ComplexMatrix& a) {
  const SchurForm s = schur(a);
  const ComplexMatrix& t = s.T;
  const std::size_t n = t.order();
  const double scale = std::max(one_norm(t), 1.0);
  const double tiny = 1e-10 * scale;
  ComplexMatrix y(n);
  for (std::size_t k = 0; k < n; ++k) {
    y(k, k) = 1.0;
    for (std::size_t i = k; i-- > 0;) {
      Complex num = 0.0;
      for (std::size_t j = i + 1; j <= k; ++j) num += t(i, j) * y(j, k);
      const Complex den = t(k, k) - t(i, i);
      if (std::abs(den) <= tiny) {
        if (std::abs(num) > tiny)
          fail(ErrorCode::Refused, "oracle: matrix is defective to working precision");
        y(i, k) = 0.0;
      } else {
        y(i, k) = num / den;
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i <= k; ++i) nrm += std::norm(y(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i <= k; ++i) y(i, k) /= nrm;
  }
  return {s.U * y, t.diag()};
}

double distance(const ComplexMatrix& x, const ComplexMatrix& y) { return fro_norm(x - y); }

}  // namespace

std::complex<long double> gamma_reference(std::complex<long double> z) {
  if (z.real() < 0.5L) {
    const cld s = sin_pi(z);
    if (std::abs(s) == 0.0L) fail(ErrorCode::PoleProximity, "gamma_reference: pole");
    return std::numbers::pi_v<long double> / (s * gamma_reference(1.0L - z));
  }
  cld prod = 1.0L;
  cld w = z;
  while (std::abs(w) < 20.0L) {
    prod *= w;
    w += 1.0L;
  }
  return std::exp(log_gamma_stirling(w)) / prod;
}

double eigenvector_condition(const ComplexMatrix& a) {
  const Eigensystem es = eigensystem(a);
  try {
    return two_norm(es.v) * two_norm(inverse(es.v));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular)
      fail(ErrorCode::Refused, "oracle: eigenvector matrix is singular");
    throw;
  }
}

ComplexMatrix oracle_gamma(const ComplexMatrix& a) {
  const Eigensystem es = eigensystem(a);
  check_poles(es.lambda);
  ComplexMatrix v_inv;
  try {
    v_inv = inverse(es.v);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular)
      fail(ErrorCode::Refused, "oracle: eigenvector matrix is singular");
    throw;
  }
  const double kappa = two_norm(es.v) * two_norm(v_inv);
  if (kappa > kOracleMaxEigenvectorCond)
    fail(ErrorCode::Refused, "oracle: eigenvector condition number exceeds 1e6");
  const std::size_t n = a.order();
  ComplexMatrix vd = es.v;
  for (std::size_t j = 0; j < n; ++j) {
    const cld g = gamma_reference(cld(es.lambda[j].real(), es.lambda[j].imag()));
    const Complex gd(static_cast<double>(g.real()), static_cast<double>(g.imag()));
    for (std::size_t i = 0; i < n; ++i) vd(i, j) *= gd;
  }
  return vd * v_inv;
}

Reference reference_gamma(const ComplexMatrix& a) {
  try {
    return {oracle_gamma(a), true};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Refused) throw;
  }
  std::vector<ComplexMatrix> results;
  for (GammaMethod m : kAllMethods) {
    try {
      results.push_back(gamma(a, m));
    } catch (const Error&) {
    }
  }
  if (results.empty()) fail(ErrorCode::Refused, "reference: oracle refused and every backend failed");
  std::size_t best = 0;
  double best_sum = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < results.size(); ++j) sum += distance(results[i], results[j]);
    if (i == 0 || sum < best_sum) {
      best = i;
      best_sum = sum;
    }
  }
  return {results[best], false};
}

}  // namespace matgamma::harness
