#include "matgamma/harness/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "matgamma/error.hpp"
#include "matgamma/linalg.hpp"

namespace matgamma::harness {
namespace {

ComplexMatrix lehmer(std::size_t n) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = double(std::min(i, j) + 1) / double(std::max(i, j) + 1);
  return a;
}

ComplexMatrix hilbert(std::size_t n) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 1.0 / double(i + j + 1);
  return a;
}

ComplexMatrix cauchy(std::size_t n) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 1.0 / double(i + j + 2);
  return a;
}

// I + theta x y^T / (y^T x): a rank-one oblique projector added to the
// identity, so the eigenvalues are 1 (n - 1 times) and 1 + theta while the
// eigenvector matrix is far from orthogonal.
ComplexMatrix condex_like(std::size_t n) {
  constexpr double theta = 10.0;
  std::vector<double> x(n), y(n);
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 1.0;
    y[i] = (i % 2 == 0 ? -1.0 : 1.0) * double(i + 1);
    dot += x[i] * y[i];
  }
  ComplexMatrix a = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) += theta * x[i] * y[j] / dot;
  return a;
}

// B(i, j) = i - 1 if i divides j, else -1, with i, j = 2..n+1.
ComplexMatrix riemann_like(std::size_t n) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ((j + 2) % (i + 2) == 0) ? double(i + 1) : -1.0;
  return a;
}

ComplexMatrix random_dense(std::size_t n, Rng& rng) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(rng.uniform(-1.0, 1.0), 0.0);
  return a;
}

ComplexMatrix rand_stable(std::size_t n, Rng& rng) {
  ComplexMatrix a = random_dense(n, rng);
  double min_re = 0.0;
  bool first = true;
  for (const Complex& z : schur(a).eigenvalues()) {
    min_re = first ? z.real() : std::min(min_re, z.real());
    first = false;
  }
  a.shift(1.0 - min_re);
  return a;
}

// Q T Q* with prescribed eigenvalues on both sides of the imaginary axis, each
// at least 0.25 away from the integers, and a mild strictly upper part.
ComplexMatrix rand_mixed(std::size_t n, Rng& rng) {
  ComplexMatrix t(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double base = -3.0 + double((k * 5) % 6);
    const double re = base + 0.25 + 0.5 * rng.uniform();
    const double im = 0.6 * (rng.uniform() - 0.5);
    t(k, k) = Complex(re, im);
    for (std::size_t j = k + 1; j < n; ++j)
      t(k, j) = Complex(0.2 * rng.uniform(-1.0, 1.0), 0.2 * rng.uniform(-1.0, 1.0));
  }
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  const ComplexMatrix q = schur(g).U;
  return q * t * q.adjoint();
}

ComplexMatrix jordan(std::size_t n, Complex lambda) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = lambda;
    if (i + 1 < n) a(i, i + 1) = 1.0;
  }
  return a;
}

std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"lehmer",     "hilbert",     "cauchy",
                                                 "condex-like", "riemann-like", "rand-stable",
                                                 "rand-mixed",  "jordan"};
  return names;
}

ComplexMatrix gallery(std::string_view name, std::size_t n, std::uint64_t seed, Complex lambda) {
  if (n < 2 || n > 64)
    fail(ErrorCode::OutOfRange, "gallery order " + std::to_string(n) + " outside 2..64");
  Rng rng(seed);
  if (name == "lehmer") return lehmer(n);
  if (name == "hilbert") return hilbert(n);
  if (name == "cauchy") return cauchy(n);
  if (name == "condex-like") return condex_like(n);
  if (name == "riemann-like") return riemann_like(n);
  if (name == "rand-stable") return rand_stable(n, rng);
  if (name == "rand-mixed") return rand_mixed(n, rng);
  if (name == "jordan") return jordan(n, lambda);
  fail(ErrorCode::MalformedInput, "unknown gallery matrix '" + std::string(name) + "'");
}

std::string GallerySpec::label() const {
  std::string s = name + "-" + std::to_string(n);
  if (name == "rand-stable" || name == "rand-mixed") s += "-s" + std::to_string(seed);
  if (name == "jordan") s += "-l" + format_number(lambda.real());
  if (shift != 0.0) s += (shift > 0 ? "+" : "") + format_number(shift);
  return s;
}

ComplexMatrix GallerySpec::build() const {
  ComplexMatrix a = gallery(name, n, seed, lambda);
  a.shift(shift);
  return a;
}

std::vector<GallerySpec> default_suite(std::uint64_t seed) {
  return {
      {"lehmer", 5, 0.0, seed, 1.0},
      {"hilbert", 6, 1.0, seed, 1.0},
      {"cauchy", 7, 0.5, seed, 1.0},
      {"condex-like", 8, 0.0, seed, 1.0},
      {"riemann-like", 9, 0.0, seed, 1.0},
      {"rand-stable", 10, 0.0, seed, 1.0},
      {"rand-mixed", 11, 0.0, seed + 1, 1.0},
      {"jordan", 5, 0.0, seed, 1.5},
      {"lehmer", 12, 0.5, seed, 1.0},
      {"rand-stable", 13, 0.0, seed + 2, 1.0},
      {"rand-mixed", 14, 0.0, seed + 3, 1.0},
      {"hilbert", 9, 0.5, seed, 1.0},
      {"riemann-like", 6, 0.0, seed, 1.0},
      {"jordan", 7, 0.0, seed, Complex(-1.5, 0.0)},
      {"rand-mixed", 8, 0.0, seed + 4, 1.0},
  };
}

}  // namespace matgamma::harness
