#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "matgamma/gamma_core.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/matrix.hpp"

namespace matgamma {

struct BlockRange {
  std::size_t begin;
  std::size_t size;
  std::size_t end() const noexcept { return begin + size; }
};

/// Contiguous diagonal blocks of a reordered Schur factor.
struct BlockPartition {
  std::vector<BlockRange> ranges;
  std::vector<Complex> cluster_reps;
  double delta = 0.1;

  std::size_t blocks() const noexcept { return ranges.size(); }
};

inline constexpr double kDefaultDelta = 0.1;

/// Cluster ids for each eigenvalue: transitive closure of |l_i - l_j| <= delta,
/// then split by sign of the real part (|Re| <= 1e-12 counts as positive).
/// Ids are numbered in a canonical order that depends only on the multiset of
/// values, so the partition is independent of the input ordering.
std::vector<std::size_t> cluster_eigenvalues(std::span<const Complex> eigenvalues, double delta);

/// Moves the eigenvalues of each cluster together (cluster 0 first) by
/// adjacent unitary swaps, accumulating into U.
struct ReorderedSchur {
  SchurForm schur;
  BlockPartition partition;
};
ReorderedSchur reorder_schur(const SchurForm& s, std::span<const std::size_t> assignment,
                             double delta = kDefaultDelta);

/// X M - N X = P for upper-triangular M (m x m), N (k x k) and a k x m
/// right-hand side stored row-major. Throws ErrorCode::SylvesterCollision when
/// the spectra of M and N come within 1e-12 (||M|| + ||N||).
std::vector<Complex> sylvester_triangular(const ComplexMatrix& m, const ComplexMatrix& n,
                                          std::span<const Complex> p);
/// Square convenience form.
ComplexMatrix sylvester_triangular(const ComplexMatrix& m, const ComplexMatrix& n,
                                   const ComplexMatrix& p);

/// Block Parlett recurrence: fills the off-diagonal blocks of G = f(T) from the
/// diagonal blocks f(T_ii), superdiagonal by superdiagonal.
ComplexMatrix parlett_recurrence(const ComplexMatrix& t, const BlockPartition& partition,
                                 std::span<const ComplexMatrix> diag_blocks);

struct GammaOptions {
  double delta = kDefaultDelta;
};

struct GammaDiagnostics {
  BlockPartition partition;
  /// Smallest distance between eigenvalues in different blocks (infinity for one block).
  double min_separation = 0.0;
  bool retried = false;
  double schur_backtransform_error = 0.0;
};

struct GammaResult {
  ComplexMatrix value;
  GammaDiagnostics diagnostics;
};

/// Gamma(A) by Schur-Parlett with the chosen backend on each diagonal block.
GammaResult gamma_with_diagnostics(const ComplexMatrix& a, GammaMethod method,
                                   const GammaOptions& options = {});
ComplexMatrix gamma(const ComplexMatrix& a, GammaMethod method = GammaMethod::Lanczos,
                    const GammaOptions& options = {});

}  // namespace matgamma
