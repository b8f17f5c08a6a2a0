#pragma once

#include <optional>
#include <string>

#include "nct/io.hpp"

namespace nct {

struct ConfigError : Error {
  std::string field;
  ConfigError(std::string field_, const std::string& msg)
      : Error(msg), field(std::move(field_)) {}
};

/// Exit-code contract of the CLI: 0 success, 1 check failure, 2 config
/// error, 3 numerical failure.
enum ExitCode {
  kOk = 0,
  kCheckFailure = 1,
  kConfigError = 2,
  kNumericalFailure = 3,
};

enum class MetricKind { Flat, Conformal, General };

struct JobConfig {
  int n = 2;
  std::vector<double> theta;  // row-major n*n
  int cutoff = 0;
  int working_cutoff = -1;
  double tol = 1e-9;
  MetricKind metric_kind = MetricKind::Flat;
  Json h_json;                 // conformal factor, element wire format
  Json g_json;                 // general metric, keys "g[j][k]"
  int grid_size = 64;
  std::optional<std::pair<int, int>> rational;
  bool strict_truncation = false;
  bool parallel = false;

  ContextPtr make_context() const;
  /// The conformal factor h; only valid for MetricKind::Conformal.
  Element conformal_factor(const ContextPtr& ctx) const;
  Metric build_metric(const ContextPtr& ctx) const;
};

JobConfig config_from_json(const Json& j);
/// Throws ConfigError on parse or schema problems, naming the field.
JobConfig load_config(const std::string& path);

/// Full pipeline: Levi-Civita, curvature tensor, JSON + CSV reports.
/// Writes curvature.json and summary.csv under output_dir. All outputs are
/// assembled before anything touches the filesystem, so a pipeline error
/// leaves no partial files.
int run_curvature(const JobConfig& cfg, const std::string& output_dir);

/// Identity residuals plus algebra axiom spot checks; writes residuals.json.
/// Returns kCheckFailure if any residual breaches 10x tol.
/// `inject_corruption` perturbs one Christoffel coefficient by 0.1 U_1
/// first, to exercise the failure path.
int run_checks(const JobConfig& cfg, const std::string& output_dir,
               bool inject_corruption = false);

/// tau(R_{1,2,1,2} e^{-h}); writes gauss_bonnet.json. Returns kCheckFailure
/// if the value exceeds its tolerance budget.
int run_gauss_bonnet(const JobConfig& cfg, const std::string& output_dir);

/// mode is one of "classical", "matrix-rep", "conformal-closed-form".
int run_oracle(const JobConfig& cfg, const std::string& mode,
               const std::string& output_dir);

}  // namespace nct
