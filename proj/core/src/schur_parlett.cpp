#include "matgamma/schur_parlett.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "matgamma/error.hpp"

namespace matgamma {
namespace {

bool positive_side(Complex z) { return z.real() >= -kImaginaryAxisTolerance; }

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

// Plane rotation with real cosine: [c s; -conj(s) c] [f; g] = [r; 0].
struct Givens {
  double c = 1.0;
  Complex s = 0.0;

  static Givens make(Complex f, Complex g) {
    if (g == Complex(0.0)) return {};
    if (f == Complex(0.0)) return {0.0, std::conj(g) / std::abs(g)};
    const double af = std::abs(f);
    const double norm = std::hypot(af, std::abs(g));
    return {af / norm, (f / af) * std::conj(g) / norm};
  }
};

// x <- c x + s y, y <- c y - conj(s) x
void rotate(Complex& x, Complex& y, double c, Complex s) {
  const Complex xn = c * x + s * y;
  y = c * y - std::conj(s) * x;
  x = xn;
}

void swap_adjacent(ComplexMatrix& t, ComplexMatrix& u, std::size_t k) {
  const std::size_t n = t.order();
  const Complex t11 = t(k, k);
  const Complex t22 = t(k + 1, k + 1);
  const Givens g = Givens::make(t(k, k + 1), t22 - t11);
  for (std::size_t j = k + 2; j < n; ++j) rotate(t(k, j), t(k + 1, j), g.c, g.s);
  for (std::size_t i = 0; i < k; ++i) rotate(t(i, k), t(i, k + 1), g.c, std::conj(g.s));
  t(k, k) = t22;
  t(k + 1, k + 1) = t11;
  for (std::size_t i = 0; i < n; ++i) rotate(u(i, k), u(i, k + 1), g.c, std::conj(g.s));
}

ComplexMatrix diag_block(const ComplexMatrix& t, const BlockRange& r) {
  return t.block(r.begin, r.size);
}

double separation(const ComplexMatrix& t, const BlockPartition& p) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < p.blocks(); ++a)
    for (std::size_t b = a + 1; b < p.blocks(); ++b)
      for (std::size_t i = p.ranges[a].begin; i < p.ranges[a].end(); ++i)
        for (std::size_t j = p.ranges[b].begin; j < p.ranges[b].end(); ++j)
          sep = std::min(sep, std::abs(t(i, i) - t(j, j)));
  return sep;
}

}  // namespace

std::vector<std::size_t> cluster_eigenvalues(std::span<const Complex> eig, double delta) {
  if (!(delta > 0.0)) fail(ErrorCode::Precondition, "cluster_eigenvalues needs delta > 0");
  const std::size_t n = eig.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(eig[i] - eig[j]) <= delta) parent[find_root(parent, i)] = find_root(parent, j);

  // A cluster key is (chain root, side). Order keys by their lexicographically
  // smallest member.
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = 2 * find_root(parent, i) + (positive_side(eig[i]) ? 1 : 0);
  std::vector<std::size_t> keys(key);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Complex> rep(keys.size());
  std::vector<bool> seen(keys.size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = std::lower_bound(keys.begin(), keys.end(), key[i]) - keys.begin();
    if (!seen[c] || lex_less(eig[i], rep[c])) rep[c] = eig[i];
    seen[c] = true;
  }
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(rep[a], rep[b]); });
  std::vector<std::size_t> rank(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = rank[std::lower_bound(keys.begin(), keys.end(), key[i]) - keys.begin()];
  return out;
}

ReorderedSchur reorder_schur(const SchurForm& s, std::span<const std::size_t> assignment,
                             double delta) {
  const std::size_t n = s.T.order();
  if (assignment.size() != n)
    fail(ErrorCode::DimensionMismatch, "reorder_schur: assignment length differs from the order");
  ReorderedSchur out{s, {}};
  out.partition.delta = delta;
  ComplexMatrix& t = out.schur.T;
  ComplexMatrix& u = out.schur.U;
  std::vector<std::size_t> id(assignment.begin(), assignment.end());
  const std::size_t clusters = n == 0 ? 0 : *std::max_element(id.begin(), id.end()) + 1;

  std::size_t pos = 0;
  for (std::size_t c = 0; c < clusters; ++c) {
    const std::size_t begin = pos;
    for (std::size_t j = pos; j < n; ++j) {
      if (id[j] != c) continue;
      for (std::size_t k = j; k > pos; --k) {
        if (t(k - 1, k - 1) == t(k, k))
          fail(ErrorCode::Internal, "reorder_schur: equal eigenvalues assigned to different clusters");
        swap_adjacent(t, u, k - 1);
        std::swap(id[k - 1], id[k]);
      }
      ++pos;
    }
    if (pos == begin) fail(ErrorCode::Precondition, "reorder_schur: cluster ids are not contiguous");
    out.partition.ranges.push_back({begin, pos - begin});
    out.partition.cluster_reps.push_back(t(begin, begin));
  }
  return out;
}

std::vector<Complex> sylvester_triangular(const ComplexMatrix& m, const ComplexMatrix& n,
                                          std::span<const Complex> p) {
  const std::size_t cm = m.order();
  const std::size_t rn = n.order();
  if (p.size() != cm * rn)
    fail(ErrorCode::DimensionMismatch, "sylvester_triangular: right-hand side has the wrong size");
  const double scale = one_norm(m) + one_norm(n);
  const double tol = 1e-12 * scale;
  for (std::size_t j = 0; j < cm; ++j)
    for (std::size_t i = 0; i < rn; ++i)
      if (std::abs(m(j, j) - n(i, i)) <= tol)
        fail(ErrorCode::SylvesterCollision,
             "sylvester_triangular: spectra of the two blocks collide");

  std::vector<Complex> x(p.begin(), p.end());
  std::vector<Complex> col(rn);
  for (std::size_t j = 0; j < cm; ++j) {
    // (M_jj I - N) x_j = p_j - sum_{l<j} x_l M_lj
    for (std::size_t i = 0; i < rn; ++i) {
      Complex v = x[i * cm + j];
      for (std::size_t l = 0; l < j; ++l) v -= x[i * cm + l] * m(l, j);
      col[i] = v;
    }
    for (std::size_t ii = rn; ii-- > 0;) {
      Complex v = col[ii];
      for (std::size_t l = ii + 1; l < rn; ++l) v += n(ii, l) * col[l];
      col[ii] = v / (m(j, j) - n(ii, ii));
    }
    for (std::size_t i = 0; i < rn; ++i) x[i * cm + j] = col[i];
  }
  return x;
}

ComplexMatrix sylvester_triangular(const ComplexMatrix& m, const ComplexMatrix& n,
                                   const ComplexMatrix& p) {
  if (m.order() != n.order() || p.order() != m.order())
    fail(ErrorCode::DimensionMismatch, "sylvester_triangular: orders differ");
  return ComplexMatrix::from_data(p.order(), sylvester_triangular(m, n, p.data()));
}

ComplexMatrix parlett_recurrence(const ComplexMatrix& t, const BlockPartition& partition,
                                 std::span<const ComplexMatrix> diag_blocks) {
  const std::size_t n = t.order();
  const std::size_t p = partition.blocks();
  if (diag_blocks.size() != p)
    fail(ErrorCode::DimensionMismatch, "parlett_recurrence: one diagonal block per range expected");
  ComplexMatrix g(n);
  for (std::size_t b = 0; b < p; ++b) {
    const BlockRange& r = partition.ranges[b];
    if (diag_blocks[b].order() != r.size)
      fail(ErrorCode::DimensionMismatch, "parlett_recurrence: diagonal block has the wrong order");
    for (std::size_t i = 0; i < r.size; ++i)
      for (std::size_t j = 0; j < r.size; ++j) g(r.begin + i, r.begin + j) = diag_blocks[b](i, j);
  }

  for (std::size_t d = 1; d < p; ++d) {
    for (std::size_t bi = 0; bi + d < p; ++bi) {
      const std::size_t bj = bi + d;
      const BlockRange& ri = partition.ranges[bi];
      const BlockRange& rj = partition.ranges[bj];
      // rhs = T_ij G_jj - G_ii T_ij + sum_{i<k<j} (T_ik G_kj - G_ik T_kj)
      std::vector<Complex> rhs(ri.size * rj.size);
      for (std::size_t r = ri.begin; r < ri.end(); ++r) {
        for (std::size_t c = rj.begin; c < rj.end(); ++c) {
          Complex v = 0.0;
          for (std::size_t l = partition.ranges[bi + 1].begin; l <= c; ++l) v += t(r, l) * g(l, c);
          for (std::size_t l = r; l < partition.ranges[bj - 1].end(); ++l) v -= g(r, l) * t(l, c);
          rhs[(r - ri.begin) * rj.size + (c - rj.begin)] = v;
        }
      }
      const auto x = sylvester_triangular(diag_block(t, rj), diag_block(t, ri), rhs);
      for (std::size_t r = 0; r < ri.size; ++r)
        for (std::size_t c = 0; c < rj.size; ++c) g(ri.begin + r, rj.begin + c) = x[r * rj.size + c];
    }
  }
  return g;
}

namespace {

GammaResult gamma_attempt(const SchurForm& s, GammaMethod method, double delta) {
  const auto eig = s.eigenvalues();
  const auto assignment = cluster_eigenvalues(eig, delta);
  ReorderedSchur ro = reorder_schur(s, assignment, delta);
  const ComplexMatrix& t = ro.schur.T;

  std::vector<ComplexMatrix> blocks;
  blocks.reserve(ro.partition.blocks());
  for (const BlockRange& r : ro.partition.ranges) blocks.push_back(gamma_backend(diag_block(t, r), method));
  const ComplexMatrix g = parlett_recurrence(t, ro.partition, blocks);
  const ComplexMatrix& u = ro.schur.U;

  GammaResult out;
  out.value = u * g * u.adjoint();
  out.diagnostics.min_separation = separation(t, ro.partition);
  out.diagnostics.partition = std::move(ro.partition);
  out.diagnostics.schur_backtransform_error = s.backtransform_error;
  return out;
}

}  // namespace

GammaResult gamma_with_diagnostics(const ComplexMatrix& a, GammaMethod method,
                                   const GammaOptions& options) {
  if (a.empty()) fail(ErrorCode::DimensionMismatch, "gamma: empty matrix");
  if (!a.is_finite()) fail(ErrorCode::NonFiniteInput, "gamma: matrix has non-finite entries");
  const SchurForm s = schur(a);
  const auto eig = s.eigenvalues();
  check_poles(eig);
  try {
    return gamma_attempt(s, method, options.delta);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SylvesterCollision) throw;
  }
  GammaResult out = gamma_attempt(s, method, 2.0 * options.delta);
  out.diagnostics.retried = true;
  return out;
}

ComplexMatrix gamma(const ComplexMatrix& a, GammaMethod method, const GammaOptions& options) {
  return gamma_with_diagnostics(a, method, options).value;
}

}  // namespace matgamma
