#include "matgamma/harness/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matgamma/analysis.hpp"
#include "matgamma/harness/experiment.hpp"
#include "matgamma/harness/gallery.hpp"
#include "matgamma/harness/io.hpp"
#include "matgamma/linalg.hpp"
#include "matgamma/schur_parlett.hpp"

namespace matgamma::harness {
namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

json bound_json(const BoundReport& r) {
  json j = {{"kind", to_string(r.kind)}, {"evaluable", r.evaluable()}};
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["inputs"] = r.inputs;
  j["per_term"] = r.per_term;
  if (r.offending_term) j["offending_term"] = *r.offending_term;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("MATGAMMA_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::MalformedInput, "MATGAMMA_SEED is not an unsigned integer");
  }
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonFiniteInput:
      return 2;
    case ErrorCode::PoleProximity:
      return 3;
    case ErrorCode::NonConvergence:
      return 4;
    case ErrorCode::Precondition:
    case ErrorCode::Singular:
    case ErrorCode::BranchCut:
    case ErrorCode::Overflow:
    case ErrorCode::SylvesterCollision:
    case ErrorCode::OutOfRange:
    case ErrorCode::Refused:
      return 5;
    case ErrorCode::Internal:
      return 1;
  }
  return 1;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Matrix gamma function toolkit"};
  app.require_subcommand(1);

  std::string method_name = "lanczos";
  std::string input, output, format_name, a_path, b_path, out_path;
  double delta = kDefaultDelta;

  auto* compute = app.add_subcommand("compute", "Gamma(A) for a matrix file");
  compute->add_option("--method", method_name, "lanczos | spouge | recip");
  compute->add_option("--input", input, "matrix file (.json or .csv)")->required();
  compute->add_option("--output", output, "write the result here instead of stdout");
  compute->add_option("--format", format_name, "json | csv (default: from the output extension)");
  compute->add_option("--delta", delta, "eigenvalue clustering radius");

  auto* beta_cmd = app.add_subcommand("beta", "B(A, B) = Gamma(A) Gamma(B) Gamma(A + B)^-1");
  beta_cmd->add_option("--a", a_path)->required();
  beta_cmd->add_option("--b", b_path)->required();
  beta_cmd->add_option("--method", method_name);
  beta_cmd->add_option("--output", output);
  beta_cmd->add_option("--format", format_name);

  auto* cond_cmd = app.add_subcommand("cond", "relative condition number of Gamma at A");
  cond_cmd->add_option("--input", input)->required();
  cond_cmd->add_option("--method", method_name);

  std::optional<double> r_opt;
  bool strict = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "norm and tail bounds for Gamma(A)");
  bounds_cmd->add_option("--input", input)->required();
  bounds_cmd->add_option("--r", r_opt, "tail bound cut point (r >= 1)");
  bounds_cmd->add_flag("--strict", strict, "exit 5 when a bound is not evaluable");

  std::string suite = "default";
  std::uint64_t seed = 1;
  bool timings = false;
  auto* bench = app.add_subcommand("bench", "relative errors over a gallery suite as CSV");
  bench->add_option("--suite", suite)->check(CLI::IsMember({"default"}));
  bench->add_option("--seed", seed);
  bench->add_option("--out", out_path)->required();
  bench->add_flag("--timings", timings, "add a wall-time column (not reproducible)");

  std::string gallery_name;
  std::size_t order = 0;
  double lambda = 1.0;
  auto* gallery_cmd = app.add_subcommand("gallery", "write a gallery matrix");
  gallery_cmd->add_option("--name", gallery_name)->required();
  gallery_cmd->add_option("--n", order)->required();
  gallery_cmd->add_option("--seed", seed);
  gallery_cmd->add_option("--lambda", lambda, "Jordan block eigenvalue");
  gallery_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto output_format = [&](const std::string& path) {
      if (!format_name.empty()) return parse_format(format_name);
      return path.empty() ? MatrixFormat::Json : format_from_path(path);
    };

    if (*compute) {
      const GammaMethod method = parse_method(method_name);
      const auto format = output_format(output);
      const MatrixDocument doc = read_matrix_file(input);
      GammaOptions opts;
      opts.delta = delta;
      MatrixDocument result{doc.name.empty() ? "gamma" : "gamma(" + doc.name + ")",
                            gamma(doc.matrix, method, opts)};
      emit(format_matrix(result, format), output);
    } else if (*beta_cmd) {
      const GammaMethod method = parse_method(method_name);
      const auto format = output_format(output);
      const MatrixDocument a = read_matrix_file(a_path);
      const MatrixDocument b = read_matrix_file(b_path);
      emit(format_matrix({"beta", beta(a.matrix, b.matrix, method)}, format), output);
    } else if (*cond_cmd) {
      const GammaMethod method = parse_method(method_name);
      const MatrixDocument doc = read_matrix_file(input);
      const CondEstimate est = cond_gamma_estimate(doc.matrix, method);
      json j = {{"method", to_string(method)},
                {"cond", est.cond},
                {"cond_times_u", est.cond * unit_roundoff},
                {"frechet_norm", est.frechet_norm},
                {"iterations", est.iterations}};
      std::cout << j.dump() << "\n";
    } else if (*bounds_cmd) {
      const MatrixDocument doc = read_matrix_file(input);
      json j = json::object();
      bool all_evaluable = true;
      const BoundReport norm = gamma_norm_bound(doc.matrix);
      all_evaluable = all_evaluable && norm.evaluable();
      j["norm"] = bound_json(norm);
      if (r_opt) {
        const BoundReport tail = tail_bound(doc.matrix, *r_opt);
        all_evaluable = all_evaluable && tail.evaluable();
        j["tail"] = bound_json(tail);
      }
      std::cout << j.dump() << "\n";
      if (strict && !all_evaluable) {
        std::cerr << "matgamma: a bound is not evaluable (--strict)\n";
        return 5;
      }
    } else if (*bench) {
      seed = seed_from_env(seed);
      std::vector<GammaMethod> methods(std::begin(kAllMethods), std::end(kAllMethods));
      ExperimentOptions opts;
      opts.timings = timings;
      const auto records = run_experiment(default_suite(seed), methods, opts);
      write_text_file(out_path, to_csv(records, timings));
    } else if (*gallery_cmd) {
      seed = seed_from_env(seed);
      MatrixDocument doc{gallery_name, gallery(gallery_name, order, seed, lambda)};
      emit(format_matrix(doc, output_format(out_path)), out_path);
    }
  } catch (const Error& e) {
    std::cerr << "matgamma: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "matgamma: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace matgamma::harness
