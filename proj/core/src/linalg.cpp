#include "matgamma/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "matgamma/error.hpp"

namespace matgamma {
namespace {

double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Plane rotation G = [c s; -conj(s) c] with G [f; g] = [r; 0].
struct Rotation {
  double c = 1.0;
  Complex s = 0.0;

  static Rotation make(Complex f, Complex g, Complex* r = nullptr) {
    Rotation rot;
    if (g == Complex(0.0)) {
      if (r) *r = f;
      return rot;
    }
    if (f == Complex(0.0)) {
      const double ag = std::abs(g);
      rot.c = 0.0;
      rot.s = std::conj(g) / ag;
      if (r) *r = ag;
      return rot;
    }
    const double af = std::abs(f);
    const double norm = std::hypot(af, std::abs(g));
    const Complex phase = f / af;
    rot.c = af / norm;
    rot.s = phase * std::conj(g) / norm;
    if (r) *r = phase * norm;
    return rot;
  }

  // Rows p, q of m, columns [j0, j1).
  void apply_left(ComplexMatrix& m, std::size_t p, std::size_t q, std::size_t j0,
                  std::size_t j1) const {
    for (std::size_t j = j0; j < j1; ++j) {
      const Complex x = m(p, j), y = m(q, j);
      m(p, j) = c * x + s * y;
      m(q, j) = -std::conj(s) * x + c * y;
    }
  }

  // Columns p, q of m (right multiplication by G*), rows [i0, i1).
  void apply_right(ComplexMatrix& m, std::size_t p, std::size_t q, std::size_t i0,
                   std::size_t i1) const {
    for (std::size_t i = i0; i < i1; ++i) {
      const Complex x = m(i, p), y = m(i, q);
      m(i, p) = c * x + std::conj(s) * y;
      m(i, q) = -s * x + c * y;
    }
  }
};

void hessenberg(ComplexMatrix& h, ComplexMatrix& q) {
  const std::size_t n = h.order();
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm = std::hypot(xnorm, std::abs(h(i, k)));
    if (xnorm == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = x0 == Complex(0.0) ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    std::fill(v.begin(), v.end(), Complex(0.0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm = std::hypot(vnorm, std::abs(v[i]));
    if (vnorm == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // H <- P H with P = I - 2 v v*
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      dot *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * dot;
    }
    // H <- H P, Q <- Q P
    for (ComplexMatrix* m : {&h, &q}) {
      for (std::size_t i = 0; i < n; ++i) {
        Complex dot = 0.0;
        for (std::size_t j = k + 1; j < n; ++j) dot += (*m)(i, j) * v[j];
        dot *= 2.0;
        for (std::size_t j = k + 1; j < n; ++j) (*m)(i, j) -= dot * std::conj(v[j]);
      }
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

bool subdiagonal_negligible(ComplexMatrix& t, std::size_t i) {
  const double d = abs1(t(i, i)) + abs1(t(i + 1, i + 1));
  const double sd = abs1(t(i + 1, i));
  if (sd <= std::numeric_limits<double>::epsilon() * d ||
      sd <= std::numeric_limits<double>::min()) {
    t(i + 1, i) = 0.0;
    return true;
  }
  return false;
}

// Wilkinson shift from the trailing 2x2 of the active window, with
// exceptional shifts to break cycles.
Complex compute_shift(const ComplexMatrix& t, std::size_t iu, int iter) {
  if (iter == 10 || iter == 30) {
    const double ex = std::abs(t(iu, iu - 1).real()) +
                      (iu >= 2 ? std::abs(t(iu - 1, iu - 2).real()) : 0.0);
    return t(iu, iu) + ex;
  }
  Complex t00 = t(iu - 1, iu - 1), t01 = t(iu - 1, iu), t10 = t(iu, iu - 1), t11 = t(iu, iu);
  const double normt = abs1(t00) + abs1(t01) + abs1(t10) + abs1(t11);
  if (normt == 0.0) return 0.0;
  t00 /= normt;
  t01 /= normt;
  t10 /= normt;
  t11 /= normt;
  const Complex b = t01 * t10;
  const Complex c = t00 - t11;
  const Complex disc = std::sqrt(c * c + 4.0 * b);
  const Complex det = t00 * t11 - b;
  const Complex trace = t00 + t11;
  Complex e1 = (trace + disc) / 2.0;
  Complex e2 = (trace - disc) / 2.0;
  const double n1 = abs1(e1), n2 = abs1(e2);
  if (n1 > n2) {
    e2 = det / e1;
  } else if (n2 != 0.0) {
    e1 = det / e2;
  }
  return normt * (abs1(e1 - t11) < abs1(e2 - t11) ? e1 : e2);
}

void qr_iterate(ComplexMatrix& t, ComplexMatrix& u) {
  const std::size_t n = t.order();
  if (n == 1) return;
  std::size_t iu = n - 1;
  int iter = 0;
  std::size_t total = 0;
  const std::size_t max_iter = 30 * n;
  while (true) {
    while (iu > 0) {
      if (!subdiagonal_negligible(t, iu - 1)) break;
      iter = 0;
      --iu;
    }
    if (iu == 0) break;
    ++iter;
    if (++total > max_iter) {
      std::ostringstream os;
      os << "complex QR did not converge after " << max_iter << " sweeps (order " << n << ")";
      fail(ErrorCode::NonConvergence, os.str());
    }
    std::size_t il = iu - 1;
    while (il > 0 && !subdiagonal_negligible(t, il - 1)) --il;

    const Complex shift = compute_shift(t, iu, iter);
    Rotation rot = Rotation::make(t(il, il) - shift, t(il + 1, il));
    rot.apply_left(t, il, il + 1, il, n);
    rot.apply_right(t, il, il + 1, 0, std::min(il + 2, iu) + 1);
    rot.apply_right(u, il, il + 1, 0, n);

    for (std::size_t i = il + 1; i < iu; ++i) {
      Complex r;
      rot = Rotation::make(t(i, i - 1), t(i + 1, i - 1), &r);
      t(i, i - 1) = r;
      t(i + 1, i - 1) = 0.0;
      rot.apply_left(t, i, i + 1, i, n);
      rot.apply_right(t, i, i + 1, 0, std::min(i + 2, iu) + 1);
      rot.apply_right(u, i, i + 1, 0, n);
    }
  }
}

}  // namespace

ComplexMatrix SchurForm::reconstruct() const { return U * T * U.adjoint(); }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) fail(ErrorCode::DimensionMismatch, "solve: A and B orders differ");
  const double threshold = static_cast<double>(n) * unit_roundoff * one_norm(a);
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        p = i;
      }
    }
    if (!(best > threshold)) {
      std::ostringstream os;
      os << "pivot " << best << " at step " << k << " is below n*u*||A||_1 = " << threshold;
      fail(ErrorCode::Singular, os.str());
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu(k, j), lu(p, j));
        std::swap(x(k, j), x(p, j));
      }
    }
    const Complex pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = lu(i, k) / pivot;
      if (l == Complex(0.0)) continue;
      lu(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
      for (std::size_t j = 0; j < n; ++j) x(i, j) -= l * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = x(kk, j);
      for (std::size_t m = kk + 1; m < n; ++m) s -= lu(kk, m) * x(m, j);
      x(kk, j) = s / lu(kk, kk);
    }
  }
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  return solve(a, ComplexMatrix::identity(a.order()));
}

SchurForm schur(const ComplexMatrix& a) {
  if (!a.is_finite()) fail(ErrorCode::NonFiniteInput, "schur: non-finite entries");
  const std::size_t n = a.order();
  SchurForm s{ComplexMatrix::identity(n), a, 0.0};
  if (a.is_upper_triangular()) return s;

  hessenberg(s.T, s.U);
  qr_iterate(s.T, s.U);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) s.T(i, j) = 0.0;

  const double anorm = fro_norm(a);
  s.backtransform_error = anorm == 0.0 ? 0.0 : fro_norm(a - s.reconstruct()) / anorm;
  return s;
}

double spectral_abscissa(const SchurForm& s) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.T.order(); ++i) best = std::max(best, s.T(i, i).real());
  return best;
}

double spectral_radius(const SchurForm& s) {
  double best = 0.0;
  for (std::size_t i = 0; i < s.T.order(); ++i) best = std::max(best, std::abs(s.T(i, i)));
  return best;
}

double spectral_abscissa(const ComplexMatrix& a) { return spectral_abscissa(schur(a)); }
double spectral_radius(const ComplexMatrix& a) { return spectral_radius(schur(a)); }

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.order(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double inf_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.order(); ++j) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

double fro_norm(const ComplexMatrix& a) {
  double scale = 0.0, ssq = 1.0;
  for (const Complex& z : a.data()) {
    for (double v : {z.real(), z.imag()}) {
      if (v == 0.0) continue;
      const double av = std::abs(v);
      if (scale < av) {
        ssq = 1.0 + ssq * (scale / av) * (scale / av);
        scale = av;
      } else {
        ssq += (av / scale) * (av / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

double two_norm(const ComplexMatrix& a) {
  const std::size_t n = a.order();
  const double fro = fro_norm(a);
  if (fro == 0.0) return 0.0;
  if (n == 1) return std::abs(a(0, 0));
  const ComplexMatrix b = a / fro;
  const ComplexMatrix g = b.adjoint() * b;
  // Start from the column of largest norm, a deterministic choice that is
  // never orthogonal to the dominant singular vector for rank-one inputs.
  std::size_t best_col = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(b(i, j));
    if (s > best) {
      best = s;
      best_col = j;
    }
  }
  std::vector<Complex> x(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
  x[best_col] += 1.0;
  double lambda = 0.0;
  for (int it = 0; it < 1000; ++it) {
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += g(i, j) * x[j];
    double ny = 0.0;
    for (const auto& v : y) ny = std::hypot(ny, std::abs(v));
    if (ny == 0.0) return 0.0;
    for (auto& v : y) v /= ny;
    const double prev = lambda;
    lambda = ny;
    x = std::move(y);
    if (it > 0 && std::abs(lambda - prev) <= 1e-12 * lambda) return std::sqrt(lambda) * fro;
  }
  return fro;
}

Norms norms(const ComplexMatrix& a) {
  return {one_norm(a), two_norm(a), inf_norm(a), fro_norm(a)};
}

void solve_upper_triangular(const ComplexMatrix& t, std::vector<Complex>& b) {
  const std::size_t n = t.order();
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= t(i, k) * b[k];
    b[i] = s / t(i, i);
  }
}

}  // namespace matgamma
