#include "matgamma/matfun.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "matgamma/error.hpp"
#include "matgamma/linalg.hpp"

namespace matgamma {
namespace {

constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};

constexpr std::array<double, 4> kB3 = {120., 60., 12., 1.};
constexpr std::array<double, 6> kB5 = {30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kB7 = {17297280., 8648640., 1995840., 277200.,
                                       25200.,    1512.,    56.,      1.};
constexpr std::array<double, 10> kB9 = {17643225600., 8821612800., 2075673600., 302702400.,
                                        30270240.,    2162160.,    110880.,     3960.,
                                        90.,          1.};
constexpr std::array<double, 14> kB13 = {
    64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
    129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
    1323241920.,        40840800.,          960960.,           16380.,
    182.,               1.};

// Odd/even split of a low-degree Pade numerator: U = A * sum b_{2k+1} A^{2k},
// V = sum b_{2k} A^{2k}.
template <std::size_t N>
void pade_low(const ComplexMatrix& a, const std::array<double, N>& b, ComplexMatrix& u,
              ComplexMatrix& v) {
  const std::size_t n = a.order();
  const ComplexMatrix a2 = a * a;
  ComplexMatrix pw = ComplexMatrix::identity(n);
  ComplexMatrix uo(n), ve(n);
  for (std::size_t k = 0; 2 * k < N; ++k) {
    ve += b[2 * k] * pw;
    if (2 * k + 1 < N) uo += b[2 * k + 1] * pw;
    pw = pw * a2;
  }
  u = a * uo;
  v = std::move(ve);
}

void pade13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
  const std::size_t n = a.order();
  const auto& b = kB13;
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  ComplexMatrix inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

// (e^{l2} - e^{l1}) / (l2 - l1), stable for close arguments.
Complex exp_divided_difference(Complex l1, Complex l2) {
  const Complex d = (l2 - l1) / 2.0;
  const Complex mid = std::exp((l1 + l2) / 2.0);
  if (std::abs(d) < 1e-8) return mid * (1.0 + d * d / 6.0);
  return mid * std::sinh(d) / d;
}

void recompute_triangular(ComplexMatrix& r, const ComplexMatrix& t, double scale) {
  const std::size_t n = t.order();
  for (std::size_t i = 0; i < n; ++i) r(i, i) = std::exp(scale * t(i, i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    r(i, i + 1) = scale * t(i, i + 1) *
                  exp_divided_difference(scale * t(i, i), scale * t(i + 1, i + 1));
}

void check_finite(const ComplexMatrix& m, const char* what) {
  if (!m.is_finite())
    fail(ErrorCode::Overflow, std::string(what) + ": result not representable in binary64");
}

// 7-point Gauss-Legendre rule mapped to [0, 1].
constexpr std::array<double, 7> kGlNodes = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972, 0.0,
    0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
constexpr std::array<double, 7> kGlWeights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
    0.3818300505051189, 0.2797053914892767, 0.1294849661688697};

}  // namespace

bool on_negative_real_axis(Complex z) noexcept {
  if (z == Complex(0.0)) return true;
  return z.real() < 0.0 && std::abs(z.imag()) <= 1e-12 * (1.0 + std::abs(z));
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_finite()) fail(ErrorCode::NonFiniteInput, "expm: non-finite input");
  const std::size_t n = a.order();
  if (n == 1) {
    ComplexMatrix r(1);
    r(0, 0) = std::exp(a(0, 0));
    check_finite(r, "expm");
    return r;
  }
  const bool triangular = a.is_upper_triangular();
  const double norm = one_norm(a);
  ComplexMatrix u, v;
  int s = 0;
  if (norm <= kTheta[0]) {
    pade_low(a, kB3, u, v);
  } else if (norm <= kTheta[1]) {
    pade_low(a, kB5, u, v);
  } else if (norm <= kTheta[2]) {
    pade_low(a, kB7, u, v);
  } else if (norm <= kTheta[3]) {
    pade_low(a, kB9, u, v);
  } else {
    s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta[4]))));
    const ComplexMatrix scaled = a * std::ldexp(1.0, -s);
    pade13(scaled, u, v);
  }
  ComplexMatrix r = solve(v - u, v + u);
  if (triangular) recompute_triangular(r, a, std::ldexp(1.0, -s));
  for (int k = s - 1; k >= 0; --k) {
    r = r * r;
    if (triangular) recompute_triangular(r, a, std::ldexp(1.0, -k));
  }
  check_finite(r, "expm");
  return r;
}

ComplexMatrix sqrtm_triangular(const ComplexMatrix& t) {
  const std::size_t n = t.order();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = std::sqrt(t(i, i));
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      Complex s = t(i, j);
      for (std::size_t k = i + 1; k < j; ++k) s -= r(i, k) * r(k, j);
      const Complex d = r(i, i) + r(j, j);
      if (d == Complex(0.0)) {
        if (s == Complex(0.0)) continue;
        fail(ErrorCode::Singular, "sqrtm: coincident roots of opposite sign");
      }
      r(i, j) = s / d;
    }
  }
  return r;
}

ComplexMatrix logm(const ComplexMatrix& a) {
  const SchurForm sf = schur(a);
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_negative_real_axis(sf.T(i, i))) {
      std::ostringstream os;
      os << "logm: eigenvalue " << sf.T(i, i) << " has no principal logarithm";
      fail(ErrorCode::BranchCut, os.str());
    }
  }
  if (n == 1) {
    ComplexMatrix r(1);
    r(0, 0) = std::log(sf.T(0, 0));
    return r;
  }

  const ComplexMatrix id = ComplexMatrix::identity(n);
  ComplexMatrix t = sf.T;
  int k = 0;
  while (one_norm(t - id) > 0.25) {
    if (++k > 100) fail(ErrorCode::NonConvergence, "logm: square-root phase did not converge");
    t = sqrtm_triangular(t);
  }
  const ComplexMatrix x = t - id;
  ComplexMatrix l(n);
  for (std::size_t j = 0; j < kGlNodes.size(); ++j) {
    const double node = 0.5 * (kGlNodes[j] + 1.0);
    const double weight = 0.5 * kGlWeights[j];
    l += weight * solve(id + node * x, x);
  }
  l *= std::ldexp(1.0, k);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = std::log(sf.T(i, i));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = 0.0;
  return sf.U * l * sf.U.adjoint();
}

ComplexMatrix power_scalar_matrix(double t, const ComplexMatrix& m) {
  if (!(t > 0.0)) {
    std::ostringstream os;
    os << "power_scalar_matrix: base " << t << " must be positive";
    fail(ErrorCode::Precondition, os.str());
  }
  return expm(m * std::log(t));
}

ComplexMatrix power_matrix_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
  return expm(logm(a) * b);
}

ComplexMatrix sinm(const ComplexMatrix& a) {
  const Complex i(0.0, 1.0);
  return (expm(i * a) - expm(-i * a)) / (2.0 * i);
}

ComplexMatrix cosm(const ComplexMatrix& a) {
  const Complex i(0.0, 1.0);
  return (expm(i * a) + expm(-i * a)) / 2.0;
}

}  // namespace matgamma
