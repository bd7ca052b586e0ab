#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matgamma/gamma_core.hpp"
#include "matgamma/matrix.hpp"

namespace matgamma {

enum class BoundKind { TailBound, NormBound, PerturbationBound, TruncationBound, SpougeRelBound };

std::string_view to_string(BoundKind kind) noexcept;

struct BoundReport {
  BoundKind kind;
  /// Empty when the bound is not evaluable.
  std::optional<double> value;
  /// Named scalars the bound was built from (r, alpha, ||N - I||_2, mu, m, ...).
  std::map<std::string, double> inputs;
  std::vector<double> per_term;
  /// Index of the summand that made the bound not evaluable, if any.
  std::optional<int> offending_term;
  std::string note;

  bool evaluable() const noexcept { return value.has_value(); }
};

/// ||Gamma(A, r)||_2 <= sum_{k<n} ||N - I||_2^k / k! Gamma(alpha(A) + k, r)
/// with T = D + N the Schur form of A. Needs Re(lambda) > 0 and r >= 1.
BoundReport tail_bound(const ComplexMatrix& a, double r);

/// ||Gamma(A)||_2 <= sum_{k<n} ||N - I||_2^k / k! [gamma(alpha - k, 1) + Gamma(alpha + k, 1)].
/// Not evaluable when alpha - k <= 0 for some k.
BoundReport gamma_norm_bound(const ComplexMatrix& a);

enum class OperatorNorm { One, Two, Inf };

/// ||Gamma(A + E) - Gamma(A)|| <= ||E|| (gamma(1 - mu, 1) + Gamma(mu + 1, 1)),
/// mu = max(||A + E - I||, ||A - I||). Not evaluable when mu >= 1.
BoundReport perturbation_bound(const ComplexMatrix& a, const ComplexMatrix& e,
                               OperatorNorm norm = OperatorNorm::One);

/// (4 / pi^2) sum_{p=1}^{2000} sqrt((p + m)!) / ((m + 1)! (p - 1)!)
BoundReport truncation_bound(int m);

/// kappa_P sqrt(a) / ((2 pi)^(a - 1/2) (alpha_tilde - 1 + a))
double spouge_rel_bound(double kappa_p, double alpha_tilde, double a = 12.5);

/// B(A, B) = Gamma(A) Gamma(B) Gamma(A + B)^{-1}
ComplexMatrix beta(const ComplexMatrix& a, const ComplexMatrix& b,
                   GammaMethod method = GammaMethod::Lanczos);

/// L_Gamma(A, E) as the (1,2) block of Gamma([[A, E], [0, A]]).
ComplexMatrix frechet_gamma(const ComplexMatrix& a, const ComplexMatrix& e,
                            GammaMethod method = GammaMethod::Lanczos);

struct CondOptions {
  int max_iterations = 20;
  double stagnation = 1e-3;
  /// Starting direction; a fixed dense pattern when empty.
  std::optional<ComplexMatrix> start;
};

struct CondEstimate {
  double cond = 0.0;
  double frechet_norm = 0.0;
  int iterations = 0;
};

/// Relative condition number ||L_Gamma(A)||_F ||A||_F / ||Gamma(A)||_F, with
/// ||L_Gamma(A)||_F from power iteration on L* L.
CondEstimate cond_gamma_estimate(const ComplexMatrix& a, GammaMethod method = GammaMethod::Lanczos,
                                 const CondOptions& options = {});
double cond_gamma(const ComplexMatrix& a, GammaMethod method = GammaMethod::Lanczos);

}  // namespace matgamma
