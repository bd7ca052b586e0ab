#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matgamma/gamma_core.hpp"
#include "matgamma/harness/gallery.hpp"

namespace matgamma::harness {

struct ExperimentRecord {
  std::string matrix_name;
  std::size_t n = 0;
  GammaMethod method = GammaMethod::Lanczos;
  /// ||Gamma_method(A) - reference||_F / ||reference||_F
  std::optional<double> rel_error;
  /// "oracle" or "consensus"
  std::string reference;
  std::optional<double> cond_times_u;
  double wall_time_ms = 0.0;
  /// Norm bound digest: value, or empty when not evaluable.
  std::optional<double> norm_bound;
  std::string error;
};

struct ExperimentOptions {
  bool with_cond = true;
  bool timings = false;
};

/// One record per (matrix, method), sorted by matrix label then method.
std::vector<ExperimentRecord> run_experiment(const std::vector<GallerySpec>& suite,
                                             const std::vector<GammaMethod>& methods,
                                             const ExperimentOptions& options = {});

std::string to_csv(const std::vector<ExperimentRecord>& records, bool timings = false);

}  // namespace matgamma::harness
