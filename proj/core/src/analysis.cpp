#include "matgamma/analysis.hpp"

#include <cmath>
#include <numbers>

#include "matgamma/error.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/scalar_gamma.hpp"
#include "matgamma/schur_parlett.hpp"

namespace matgamma {
namespace {

void require_right_half_plane(std::span<const Complex> eig, const char* who) {
  for (const Complex& z : eig)
    if (!(z.real() > 0.0))
      fail(ErrorCode::Precondition, std::string(who) + " needs every eigenvalue in Re > 0");
}

struct SchurSplit {
  double alpha;
  double strict_norm;  // ||N - I||_2
};

SchurSplit split_schur(const ComplexMatrix& a, const char* who) {
  const SchurForm s = schur(a);
  require_right_half_plane(s.eigenvalues(), who);
  ComplexMatrix n_minus_i = s.T;
  for (std::size_t i = 0; i < a.order(); ++i) n_minus_i(i, i) = -1.0;
  return {spectral_abscissa(s), two_norm(n_minus_i)};
}

double sum_terms(const std::vector<double>& terms) {
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

double operator_norm(const ComplexMatrix& a, OperatorNorm norm) {
  switch (norm) {
    case OperatorNorm::One: return one_norm(a);
    case OperatorNorm::Two: return two_norm(a);
    case OperatorNorm::Inf: return inf_norm(a);
  }
  return one_norm(a);
}

ComplexMatrix upper_right(const ComplexMatrix& big, std::size_t n) {
  return ComplexMatrix::from_data(n, big.rect(0, n, n, n));
}

ComplexMatrix default_start(std::size_t n) {
  ComplexMatrix z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      z(i, j) = Complex(1.0 + 0.5 * std::cos(double(3 * i + 7 * j + 1)), 0.25 * std::sin(double(i + 2 * j)));
  return z;
}

}  // namespace

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::TailBound: return "tail";
    case BoundKind::NormBound: return "norm";
    case BoundKind::PerturbationBound: return "perturbation";
    case BoundKind::TruncationBound: return "truncation";
    case BoundKind::SpougeRelBound: return "spouge_rel";
  }
  return "unknown";
}

BoundReport tail_bound(const ComplexMatrix& a, double r) {
  if (!(r >= 1.0)) fail(ErrorCode::Precondition, "tail_bound needs r >= 1");
  const SchurSplit sp = split_schur(a, "tail_bound");
  BoundReport rep{BoundKind::TailBound, std::nullopt, {}, {}, std::nullopt, {}};
  rep.inputs = {{"r", r}, {"alpha", sp.alpha}, {"norm_N_minus_I", sp.strict_norm},
                {"n", double(a.order())}, {"power_k", 1.0}};
  rep.note = "summand uses ||N - I||_2^k";
  double weight = 1.0;  // ||N - I||^k / k!
  for (std::size_t k = 0; k < a.order(); ++k) {
    if (k > 0) weight *= sp.strict_norm / double(k);
    rep.per_term.push_back(weight * incomplete_gamma_upper_scalar(sp.alpha + double(k), r));
  }
  rep.value = sum_terms(rep.per_term);
  return rep;
}

BoundReport gamma_norm_bound(const ComplexMatrix& a) {
  const SchurSplit sp = split_schur(a, "gamma_norm_bound");
  BoundReport rep{BoundKind::NormBound, std::nullopt, {}, {}, std::nullopt, {}};
  rep.inputs = {{"alpha", sp.alpha}, {"norm_N_minus_I", sp.strict_norm}, {"n", double(a.order())},
                {"power_k", 1.0}};
  double weight = 1.0;
  for (std::size_t k = 0; k < a.order(); ++k) {
    if (k > 0) weight *= sp.strict_norm / double(k);
    const double s = sp.alpha - double(k);
    if (!(s > 0.0)) {
      rep.offending_term = static_cast<int>(k);
      rep.note = "not evaluable: gamma(alpha - k, 1) diverges for k = " + std::to_string(k);
      rep.per_term.clear();
      return rep;
    }
    rep.per_term.push_back(weight * (incomplete_gamma_lower_scalar(s, 1.0) +
                                     incomplete_gamma_upper_scalar(sp.alpha + double(k), 1.0)));
  }
  rep.value = sum_terms(rep.per_term);
  return rep;
}

BoundReport perturbation_bound(const ComplexMatrix& a, const ComplexMatrix& e, OperatorNorm norm) {
  if (a.order() != e.order()) fail(ErrorCode::DimensionMismatch, "perturbation_bound: orders differ");
  const ComplexMatrix ae = a + e;
  require_right_half_plane(eigenvalues_of(a), "perturbation_bound");
  require_right_half_plane(eigenvalues_of(ae), "perturbation_bound");
  BoundReport rep{BoundKind::PerturbationBound, std::nullopt, {}, {}, std::nullopt, {}};
  const double norm_e = operator_norm(e, norm);
  const double mu = std::max(operator_norm(shifted(ae, -1.0), norm), operator_norm(shifted(a, -1.0), norm));
  rep.inputs = {{"mu", mu}, {"norm_E", norm_e}, {"norm_kind", double(static_cast<int>(norm))}};
  if (norm_e == 0.0) {
    rep.value = 0.0;
    rep.per_term = {0.0};
    return rep;
  }
  if (!(1.0 - mu > 0.0)) {
    rep.offending_term = 0;
    rep.note = "not evaluable: gamma(1 - mu, 1) diverges for mu >= 1";
    return rep;
  }
  rep.per_term = {norm_e * incomplete_gamma_lower_scalar(1.0 - mu, 1.0),
                  norm_e * incomplete_gamma_upper_scalar(mu + 1.0, 1.0)};
  rep.value = sum_terms(rep.per_term);
  return rep;
}

BoundReport truncation_bound(int m) {
  if (m < 1) fail(ErrorCode::Precondition, "truncation_bound needs m >= 1");
  constexpr int kTerms = 2000;
  BoundReport rep{BoundKind::TruncationBound, std::nullopt, {}, {}, std::nullopt, {}};
  rep.inputs = {{"m", double(m)}, {"p_max", double(kTerms)}};
  const double scale = 4.0 / (std::numbers::pi * std::numbers::pi);
  const double log_m1 = std::lgamma(double(m) + 2.0);
  rep.per_term.reserve(kTerms);
  for (int p = 1; p <= kTerms; ++p) {
    const double log_term = 0.5 * std::lgamma(double(p + m) + 1.0) - log_m1 - std::lgamma(double(p));
    rep.per_term.push_back(scale * std::exp(log_term));
  }
  rep.value = sum_terms(rep.per_term);
  return rep;
}

double spouge_rel_bound(double kappa_p, double alpha_tilde, double a) {
  if (!(a >= 3.0)) fail(ErrorCode::Precondition, "spouge_rel_bound needs a >= 3");
  if (!(alpha_tilde > 0.0)) fail(ErrorCode::Precondition, "spouge_rel_bound needs alpha_tilde > 0");
  if (!(kappa_p >= 1.0)) fail(ErrorCode::Precondition, "spouge_rel_bound needs kappa_P >= 1");
  return kappa_p * std::sqrt(a) /
         (std::pow(2.0 * std::numbers::pi, a - 0.5) * (alpha_tilde - 1.0 + a));
}

ComplexMatrix beta(const ComplexMatrix& a, const ComplexMatrix& b, GammaMethod method) {
  if (a.order() != b.order()) fail(ErrorCode::DimensionMismatch, "beta: orders differ");
  const ComplexMatrix ga = gamma(a, method);
  const ComplexMatrix gb = gamma(b, method);
  const ComplexMatrix gab = gamma(a + b, method);
  return ga * gb * inverse(gab);
}

ComplexMatrix frechet_gamma(const ComplexMatrix& a, const ComplexMatrix& e, GammaMethod method) {
  const std::size_t n = a.order();
  if (e.order() != n) fail(ErrorCode::DimensionMismatch, "frechet_gamma: orders differ");
  const double ne = fro_norm(e);
  if (ne == 0.0) return ComplexMatrix::zeros(n);
  // Scale the direction to the size of A so the off-diagonal block neither
  // vanishes in rounding nor dominates the clustering.
  const double na = fro_norm(a);
  const double s = (na > 0.0 ? na : 1.0) / ne;
  const ComplexMatrix big = gamma(block_upper(a, e * s, a), method);
  return upper_right(big, n) / s;
}

CondEstimate cond_gamma_estimate(const ComplexMatrix& a, GammaMethod method,
                                 const CondOptions& options) {
  const std::size_t n = a.order();
  const ComplexMatrix a_star = a.adjoint();
  ComplexMatrix z = options.start ? *options.start : default_start(n);
  if (z.order() != n) fail(ErrorCode::DimensionMismatch, "cond_gamma: start matrix has the wrong order");
  const double nz = fro_norm(z);
  if (nz == 0.0) fail(ErrorCode::Precondition, "cond_gamma: start matrix is zero");
  z = z / nz;

  CondEstimate out;
  double estimate = 0.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const ComplexMatrix w = frechet_gamma(a, z, method);
    const double nw = fro_norm(w);
    out.iterations = it;
    if (nw == 0.0) {
      estimate = 0.0;
      break;
    }
    z = frechet_gamma(a_star, w, method);
    const double next = fro_norm(z) / nw;
    const double change = std::abs(next - estimate);
    estimate = next;
    const double nz2 = fro_norm(z);
    if (nz2 == 0.0) break;
    z = z / nz2;
    if (it > 1 && change <= options.stagnation * estimate) break;
  }
  out.frechet_norm = estimate;
  const ComplexMatrix g = gamma(a, method);
  out.cond = estimate * fro_norm(a) / fro_norm(g);
  return out;
}

double cond_gamma(const ComplexMatrix& a, GammaMethod method) {
  return cond_gamma_estimate(a, method).cond;
}

}  // namespace matgamma
