#include "matgamma/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "matgamma/analysis.hpp"
#include "matgamma/error.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/harness/oracle.hpp"
#include "matgamma/schur_parlett.hpp"

namespace matgamma::harness {
namespace {

std::string sci(std::optional<double> x) {
  if (!x) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", *x);
  return buf;
}

std::string fixed(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const std::vector<GallerySpec>& suite,
                                             const std::vector<GammaMethod>& methods,
                                             const ExperimentOptions& options) {
  if (suite.empty()) fail(ErrorCode::Precondition, "run_experiment: empty suite");
  std::vector<ExperimentRecord> records;
  for (const GallerySpec& spec : suite) {
    const std::string label = spec.label();
    ComplexMatrix a;
    std::string setup_error;
    std::optional<Reference> ref;
    std::optional<double> cond_u;
    std::optional<double> norm_bound;
    try {
      a = spec.build();
      ref = reference_gamma(a);
      if (options.with_cond) cond_u = cond_gamma(a) * unit_roundoff;
    } catch (const std::exception& e) {
      setup_error = e.what();
    }
    if (!a.empty()) {
      try {
        norm_bound = gamma_norm_bound(a).value;
      } catch (const Error&) {
      }
    }
    for (GammaMethod m : methods) {
      ExperimentRecord rec;
      rec.matrix_name = label;
      rec.n = spec.n;
      rec.method = m;
      rec.cond_times_u = cond_u;
      rec.norm_bound = norm_bound;
      if (ref) rec.reference = ref->from_oracle ? "oracle" : "consensus";
      rec.error = setup_error;
      if (!a.empty() && ref) {
        try {
          const auto start = std::chrono::steady_clock::now();
          const ComplexMatrix g = gamma(a, m);
          const auto stop = std::chrono::steady_clock::now();
          rec.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          rec.rel_error = fro_norm(g - ref->value) / fro_norm(ref->value);
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
      }
      records.push_back(std::move(rec));
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    if (x.matrix_name != y.matrix_name) return x.matrix_name < y.matrix_name;
    return static_cast<int>(x.method) < static_cast<int>(y.method);
  });
  return records;
}

std::string to_csv(const std::vector<ExperimentRecord>& records, bool timings) {
  std::string out = "matrix,n,method,reference,rel_error,cond_times_u,norm_bound";
  if (timings) out += ",wall_time_ms";
  out += ",error\n";
  for (const auto& r : records) {
    out += csv_escape(r.matrix_name) + ',' + std::to_string(r.n) + ',' + std::string(to_string(r.method)) +
           ',' + r.reference + ',' + sci(r.rel_error) + ',' + sci(r.cond_times_u) + ',' +
           sci(r.norm_bound);
    if (timings) out += ',' + fixed(r.wall_time_ms);
    out += ',' + csv_escape(r.error) + '\n';
  }
  return out;
}

}  // namespace matgamma::harness
