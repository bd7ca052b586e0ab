#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "matgamma/error.hpp"
#include "matgamma/gamma_core.hpp"
#include "matgamma/harness/gallery.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/schur_parlett.hpp"
#include "oracles.hpp"

namespace matgamma {
namespace {

using harness::Rng;
using testing::rel_diff;

std::vector<std::vector<Complex>> groups(std::span<const Complex> values, double delta) {
  const auto ids = cluster_eigenvalues(values, delta);
  std::size_t count = 0;
  for (std::size_t id : ids) count = std::max(count, id + 1);
  std::vector<std::vector<Complex>> out(count);
  for (std::size_t i = 0; i < values.size(); ++i) out[ids[i]].push_back(values[i]);
  return out;
}

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b) {
  a = sorted(std::move(a));
  b = sorted(std::move(b));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST(Clustering, Examples) {
  const std::vector<Complex> a = {0.95, 1.0, 5.0};
  auto g = groups(a, 0.1);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], (std::vector<Complex>{0.95, 1.0}));
  EXPECT_EQ(g[1], (std::vector<Complex>{5.0}));

  const std::vector<Complex> b = {-0.05, 0.05};
  EXPECT_EQ(groups(b, 0.1).size(), 2u);

  const std::vector<Complex> c = {1.0, 1.05, 1.1, 3.0};
  g = groups(c, 0.06);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].size(), 3u);
  EXPECT_EQ(g[1], (std::vector<Complex>{3.0}));
}

TEST(Clustering, NearAxisCountsAsPositive) {
  const std::vector<Complex> v = {Complex(-5e-13, 1.0), Complex(0.02, 1.0)};
  EXPECT_EQ(groups(v, 0.1).size(), 1u);
}

TEST(Clustering, PermutationDeterministic) {
  Rng rng(3);
  std::vector<Complex> v;
  for (int i = 0; i < 12; ++i) v.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-0.3, 0.3));
  v.push_back(v[2] + 0.05);
  v.push_back(v[7] - Complex(0.0, 0.08));
  auto canonical = [](std::span<const Complex> values) {
    auto g = groups(values, 0.1);
    for (auto& c : g) c = sorted(c);
    return g;
  };
  const auto reference = canonical(v);
  std::mt19937_64 shuffler(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(v.begin(), v.end(), shuffler);
    EXPECT_EQ(canonical(v), reference);
  }
}

TEST(Clustering, SeparationAndChainingInvariants) {
  Rng rng(4);
  std::vector<Complex> v;
  for (int i = 0; i < 30; ++i) v.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  const double delta = 0.15;
  const auto ids = cluster_eigenvalues(v, delta);
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool has_neighbour = false;
    bool alone = true;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (i == j) continue;
      const bool same_side = (v[i].real() >= -1e-12) == (v[j].real() >= -1e-12);
      if (ids[i] != ids[j] && same_side) EXPECT_GT(std::abs(v[i] - v[j]), delta);
      if (ids[i] == ids[j]) {
        alone = false;
        EXPECT_TRUE(same_side);
        if (std::abs(v[i] - v[j]) <= delta) has_neighbour = true;
      }
    }
    if (!alone) EXPECT_TRUE(has_neighbour);
  }
}

TEST(ReorderSchur, AlreadyContiguousIsUnchanged) {
  Rng rng(5);
  const std::vector<Complex> d = {1.0, 1.05, 3.0, 3.02};
  const auto t = testing::triangular_with_diagonal(d, rng, 0.5);
  const auto s = schur(t);
  const auto ids = cluster_eigenvalues(s.eigenvalues(), 0.1);
  const auto r = reorder_schur(s, ids, 0.1);
  EXPECT_EQ(r.schur.T, s.T);
  EXPECT_EQ(r.schur.U, s.U);
  ASSERT_EQ(r.partition.blocks(), 2u);
  EXPECT_EQ(r.partition.ranges[0].begin, 0u);
  EXPECT_EQ(r.partition.ranges[0].size, 2u);
  EXPECT_EQ(r.partition.ranges[1].begin, 2u);
}

TEST(ReorderSchur, SwapsTwoByTwoDiagonal) {
  const auto a = ComplexMatrix::diagonal({3.0, 1.0});
  const auto s = schur(a);
  const auto r = reorder_schur(s, cluster_eigenvalues(s.eigenvalues(), 0.1), 0.1);
  EXPECT_NEAR(std::abs(r.schur.T(0, 0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.schur.T(1, 1) - 3.0), 0.0, 1e-14);
  EXPECT_LE(fro_norm(r.schur.reconstruct() - a), 1e-13);
}

TEST(ReorderSchur, RandomEightByEightPreservesSpectrumAndBacktransform) {
  Rng rng(6);
  const std::vector<Complex> d = {2.0, -1.0, 0.5, 2.05, -1.04, 0.53, 2.1, Complex(0.5, 0.06)};
  const auto t = testing::triangular_with_diagonal(d, rng, 1.0);
  const auto q = testing::random_unitary(8, rng);
  const auto a = q * t * q.adjoint();
  const auto s = schur(a);
  const auto r = reorder_schur(s, cluster_eigenvalues(s.eigenvalues(), 0.1), 0.1);
  EXPECT_EQ(r.partition.blocks(), 3u);
  EXPECT_LE(spectrum_distance(r.schur.eigenvalues(), d), 1e-10);
  EXPECT_LE(fro_norm(r.schur.reconstruct() - a), 1e-12 * fro_norm(a));
  EXPECT_TRUE(r.schur.T.is_upper_triangular());
  EXPECT_LE(fro_norm(r.schur.U * r.schur.U.adjoint() - ComplexMatrix::identity(8)), 1e-13);
  // each block's eigenvalues are contiguous and within the partition
  const auto ids = cluster_eigenvalues(r.schur.eigenvalues(), 0.1);
  for (const auto& range : r.partition.ranges)
    for (std::size_t i = range.begin; i < range.end(); ++i) EXPECT_EQ(ids[i], ids[range.begin]);
}

TEST(Sylvester, Examples) {
  const auto x = sylvester_triangular(ComplexMatrix::diagonal({3.0}), ComplexMatrix::diagonal({1.0}),
                                      ComplexMatrix::diagonal({4.0}));
  EXPECT_EQ(x(0, 0), Complex(2.0));
  const auto y = sylvester_triangular(ComplexMatrix::diagonal({2.0, 4.0}), ComplexMatrix::zeros(2),
                                      ComplexMatrix::identity(2));
  EXPECT_LE(fro_norm(y - ComplexMatrix::diagonal({0.5, 0.25})), 1e-15);
}

TEST(Sylvester, RandomResidual) {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Complex> dm(5), dn(5);
    for (auto& z : dm) z = Complex(rng.uniform(2.0, 4.0), rng.uniform(-1.0, 1.0));
    for (auto& z : dn) z = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const auto m = testing::triangular_with_diagonal(dm, rng, 1.0);
    const auto n = testing::triangular_with_diagonal(dn, rng, 1.0);
    const auto p = testing::random_matrix(5, rng, true);
    const auto x = sylvester_triangular(m, n, p);
    EXPECT_LE(fro_norm(x * m - n * x - p), 1e-10 * fro_norm(x) * (fro_norm(m) + fro_norm(n)));
  }
}

TEST(Sylvester, RectangularForm) {
  Rng rng(8);
  const std::vector<Complex> dm = {3.0, 4.0, 5.0};
  const std::vector<Complex> dn = {0.5, Complex(1.0, 1.0)};
  const auto m = testing::triangular_with_diagonal(dm, rng, 1.0);
  const auto n = testing::triangular_with_diagonal(dn, rng, 1.0);
  std::vector<Complex> p(6);
  for (auto& z : p) z = Complex(rng.uniform(), rng.uniform());
  const auto x = sylvester_triangular(m, n, std::span<const Complex>(p));
  ASSERT_EQ(x.size(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Complex r = -p[i * 3 + j];
      for (std::size_t l = 0; l < 3; ++l) r += x[i * 3 + l] * m(l, j);
      for (std::size_t l = 0; l < 2; ++l) r -= n(i, l) * x[l * 3 + j];
      EXPECT_LE(std::abs(r), 1e-13);
    }
}

TEST(Sylvester, CollisionIsReported) {
  try {
    sylvester_triangular(ComplexMatrix::diagonal({1.0, 2.0}), ComplexMatrix::diagonal({2.0, 5.0}),
                         ComplexMatrix::identity(2));
    FAIL() << "expected a collision";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SylvesterCollision);
  }
}

BlockPartition unit_blocks(std::size_t n) {
  BlockPartition p;
  for (std::size_t i = 0; i < n; ++i) p.ranges.push_back({i, 1});
  return p;
}

TEST(Parlett, SingleBlockReturnsDiagonalBlock) {
  Rng rng(9);
  const std::vector<Complex> d = {1.0, 1.02, 1.05};
  const auto t = testing::triangular_with_diagonal(d, rng, 1.0);
  BlockPartition p;
  p.ranges.push_back({0, 3});
  const ComplexMatrix blocks[] = {lanczos_gamma(t)};
  EXPECT_EQ(parlett_recurrence(t, p, blocks), blocks[0]);
}

TEST(Parlett, TwoByTwoDividedDifference) {
  const auto t = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 3.0}});
  const ComplexMatrix blocks[] = {ComplexMatrix::diagonal({1.0}), ComplexMatrix::diagonal({2.0})};
  const auto g = parlett_recurrence(t, unit_blocks(2), blocks);
  EXPECT_EQ(g(0, 1), Complex(0.5));
  EXPECT_EQ(g(1, 0), Complex(0.0));
  EXPECT_EQ(g(0, 0), Complex(1.0));
  EXPECT_EQ(g(1, 1), Complex(2.0));
}

TEST(Parlett, CommutesWithT) {
  Rng rng(10);
  const std::vector<Complex> d = {1.0, 1.03, 2.5, 2.52, 2.55, Complex(4.0, 0.5)};
  const auto t = testing::triangular_with_diagonal(d, rng, 1.0);
  BlockPartition p;
  p.ranges = {{0, 2}, {2, 3}, {5, 1}};
  std::vector<ComplexMatrix> blocks;
  for (const auto& r : p.ranges) blocks.push_back(lanczos_gamma(t.block(r.begin, r.size)));
  const auto g = parlett_recurrence(t, p, blocks);
  EXPECT_LE(fro_norm(g * t - t * g), 1e-9 * fro_norm(g) * fro_norm(t));
  EXPECT_LE(rel_diff(g, lanczos_gamma(t)), 1e-9);
}

TEST(GammaDriver, Examples) {
  for (GammaMethod m : kAllMethods)
    EXPECT_LE(fro_norm(gamma(ComplexMatrix::identity(4), m) - ComplexMatrix::identity(4)), 1e-12)
        << to_string(m);
  const auto g = gamma(ComplexMatrix::diagonal({-0.5, 4.0}), GammaMethod::Lanczos);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  EXPECT_LE(fro_norm(g - ComplexMatrix::diagonal({-2.0 * sqrt_pi, 6.0})), 1e-9);
}

TEST(GammaDriver, RiemannBackendsAgree) {
  auto a = harness::gallery("riemann-like", 8);
  const auto eig = schur(a).eigenvalues();
  double lowest = 1e300;
  for (const Complex& z : eig) lowest = std::min(lowest, z.real());
  a.shift(0.6 - lowest);
  const auto gl = gamma(a, GammaMethod::Lanczos);
  EXPECT_LE(rel_diff(gamma(a, GammaMethod::Spouge), gl), 1e-7);
  EXPECT_LE(rel_diff(gamma(a, GammaMethod::Reciprocal), gl), 1e-7);
}

TEST(GammaDriver, FunctionalEquationOnMixedSpectrum) {
  Rng rng(12);
  const std::vector<Complex> d = {-2.5, -2.45, -0.7, 0.4, 0.45, 1.8, Complex(-1.3, 0.4)};
  const auto t = testing::triangular_with_diagonal(d, rng, 0.6);
  const auto q = testing::random_unitary(7, rng);
  const auto a = q * t * q.adjoint();
  for (GammaMethod m : {GammaMethod::Lanczos, GammaMethod::Reciprocal}) {
    const auto g = gamma(a, m);
    const auto g1 = gamma(shifted(a, 1.0), m);
    EXPECT_LE(fro_norm(g1 - a * g), 1e-8 * fro_norm(g1)) << to_string(m);
  }
}

TEST(GammaDriver, MatchesSpectralFormulaForNormalMatrix) {
  Rng rng(13);
  const std::vector<double> eig = {0.7, 1.3, 2.2, 3.1, 4.6};
  const auto a = testing::hermitian_with_spectrum(eig, rng);
  const auto s = schur(a);
  std::vector<Complex> values;
  for (const Complex& z : s.eigenvalues()) values.push_back(std::tgamma(z.real()));
  const auto expected = s.U * ComplexMatrix::diagonal(values) * s.U.adjoint();
  for (GammaMethod m : kAllMethods) EXPECT_LE(rel_diff(gamma(a, m), expected), 1e-11) << to_string(m);
}

TEST(GammaDriver, DiagnosticsReportPartition) {
  Rng rng(14);
  const std::vector<Complex> d = {1.0, 1.04, 3.0, -2.5};
  const auto t = testing::triangular_with_diagonal(d, rng, 0.5);
  const auto r = gamma_with_diagnostics(t, GammaMethod::Lanczos);
  EXPECT_EQ(r.diagnostics.partition.blocks(), 3u);
  EXPECT_NEAR(r.diagnostics.min_separation, 1.96, 1e-12);
  EXPECT_FALSE(r.diagnostics.retried);
  EXPECT_LE(r.diagnostics.schur_backtransform_error, 1e-14);
  const auto single = gamma_with_diagnostics(ComplexMatrix::diagonal({2.0, 2.01}), GammaMethod::Lanczos);
  EXPECT_TRUE(std::isinf(single.diagnostics.min_separation));
}

TEST(GammaDriver, JordanBlockMatchesDerivative) {
  // Gamma(J_2(lambda)) = [[Gamma(l), Gamma'(l)], [0, Gamma(l)]] and Gamma'(3) = 2 (3/2 - gamma).
  const auto j = ComplexMatrix::from_rows({{3.0, 1.0}, {0.0, 3.0}});
  const double derivative = 2.0 * (1.5 - 0.57721566490153286061);
  for (GammaMethod m : kAllMethods) {
    const auto g = gamma(j, m);
    EXPECT_NEAR(std::abs(g(0, 0) - 2.0), 0.0, 1e-11) << to_string(m);
    EXPECT_NEAR(std::abs(g(0, 1) - derivative), 0.0, 1e-9) << to_string(m);
  }
}

TEST(GammaDriver, PoleProximityPropagates) {
  try {
    gamma(ComplexMatrix::diagonal({-1.0, 2.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleProximity);
  }
}

}  // namespace
}  // namespace matgamma
