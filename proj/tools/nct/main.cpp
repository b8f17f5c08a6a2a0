#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "nct/job.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string output_dir = ".";
  bool strict_truncation = false;
  bool parallel = false;
  double tol_override = -1.0;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--config", opts->config_path, "JSON job config")
      ->required();
  cmd->add_option("--output", opts->output_dir, "output directory");
  cmd->add_flag("--strict-truncation", opts->strict_truncation,
                "error instead of projecting on working-box overflow");
  cmd->add_flag("--parallel", opts->parallel,
                "compute curvature components on multiple threads");
  cmd->add_option("--tol", opts->tol_override, "override the config tolerance");
}

nct::JobConfig load(const CommonOpts& opts) {
  nct::JobConfig cfg = nct::load_config(opts.config_path);
  cfg.strict_truncation = opts.strict_truncation;
  cfg.parallel = opts.parallel;
  if (opts.tol_override >= 0.0) cfg.tol = opts.tol_override;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemannian geometry on noncommutative tori"};
  app.require_subcommand(1);

  CommonOpts curvature_opts, check_opts, gb_opts, oracle_opts;
  bool inject_corruption = false;
  std::string oracle_mode;

  CLI::App* curvature = app.add_subcommand(
      "curvature", "Levi-Civita connection and full curvature tensor");
  add_common(curvature, &curvature_opts);

  CLI::App* check =
      app.add_subcommand("check", "identity residual suite");
  add_common(check, &check_opts);
  check->add_flag("--inject-corruption", inject_corruption,
                  "perturb one Christoffel coefficient (test mode)");

  CLI::App* gb = app.add_subcommand(
      "gauss-bonnet", "tau(R_{1,2,1,2} e^{-h}) for a conformal metric");
  add_common(gb, &gb_opts);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "independent ground-truth computations");
  oracle->add_option("mode", oracle_mode,
                     "classical | matrix-rep | conformal-closed-form")
      ->required();
  add_common(oracle, &oracle_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (curvature->parsed())
      return nct::run_curvature(load(curvature_opts),
                                curvature_opts.output_dir);
    if (check->parsed()) {
      const int rc = nct::run_checks(load(check_opts), check_opts.output_dir,
                                     inject_corruption);
      if (rc != nct::kOk)
        std::fprintf(stderr, "check failed, see residuals.json\n");
      return rc;
    }
    if (gb->parsed()) {
      const nct::JobConfig cfg = load(gb_opts);
      const int rc = nct::run_gauss_bonnet(cfg, gb_opts.output_dir);
      return rc;
    }
    if (oracle->parsed())
      return nct::run_oracle(load(oracle_opts), oracle_mode,
                             oracle_opts.output_dir);
  } catch (const nct::ConfigError& e) {
    std::fprintf(stderr, "config error (%s): %s\n", e.field.c_str(), e.what());
    return nct::kConfigError;
  } catch (const nct::InversionFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return nct::kNumericalFailure;
  } catch (const nct::TruncationBudget& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return nct::kNumericalFailure;
  } catch (const nct::SupportOverflow& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return nct::kNumericalFailure;
  } catch (const nct::NotInvertible& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return nct::kNumericalFailure;
  } catch (const nct::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return nct::kConfigError;
  }
  return nct::kOk;
}
