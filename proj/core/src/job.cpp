#include "nct/job.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "nct/oracle_conformal.hpp"
#include "nct/oracle_grid.hpp"
#include "nct/oracle_rep.hpp"

namespace nct {

namespace {

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << data;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

JobConfig config_from_json(const Json& j) {
  JobConfig cfg;
  if (!j.is_object()) throw ConfigError("<root>", "config must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw ConfigError("n", "missing or non-integer field: n");
  cfg.n = j.at("n").get<int>();
  if (cfg.n < 1) throw ConfigError("n", "n must be >= 1");

  if (!j.contains("theta")) throw ConfigError("theta", "missing field: theta");
  const Json& th = j.at("theta");
  if (th.is_number()) {
    if (cfg.n != 2)
      throw ConfigError("theta", "scalar theta is only valid for n = 2");
    const double t = th.get<double>();
    cfg.theta = {0.0, t, -t, 0.0};
  } else if (th.is_array()) {
    if (static_cast<int>(th.size()) != cfg.n)
      throw ConfigError("theta", "theta matrix must be n x n");
    for (const Json& row : th) {
      if (!row.is_array() || static_cast<int>(row.size()) != cfg.n)
        throw ConfigError("theta", "theta matrix must be n x n");
      for (const Json& v : row) {
        if (!v.is_number())
          throw ConfigError("theta", "theta entries must be numbers");
        cfg.theta.push_back(v.get<double>());
      }
    }
    for (int a = 0; a < cfg.n; ++a)
      for (int b = 0; b < cfg.n; ++b)
        if (std::abs(cfg.theta[a * cfg.n + b] + cfg.theta[b * cfg.n + a]) >
            1e-14)
          throw ConfigError("theta", "theta not skew-symmetric");
  } else {
    throw ConfigError("theta", "theta must be a number or a matrix");
  }

  if (!j.contains("cutoff") || !j.at("cutoff").is_number_integer())
    throw ConfigError("cutoff", "missing or non-integer field: cutoff");
  cfg.cutoff = j.at("cutoff").get<int>();
  if (cfg.cutoff < 1) throw ConfigError("cutoff", "cutoff must be >= 1");
  cfg.working_cutoff = j.value("working_cutoff", -1);
  if (cfg.working_cutoff >= 0 && cfg.working_cutoff < cfg.cutoff)
    throw ConfigError("working_cutoff", "working_cutoff must be >= cutoff");
  cfg.tol = j.value("tol", 1e-9);
  if (cfg.tol < 0) throw ConfigError("tol", "tol must be nonnegative");

  if (!j.contains("metric") || !j.at("metric").is_object())
    throw ConfigError("metric", "missing or malformed field: metric");
  const Json& metric = j.at("metric");
  const std::string type = metric.value("type", "");
  if (type == "flat") {
    cfg.metric_kind = MetricKind::Flat;
  } else if (type == "conformal") {
    cfg.metric_kind = MetricKind::Conformal;
    if (!metric.contains("h"))
      throw ConfigError("metric.h", "conformal metric requires h");
    cfg.h_json = metric.at("h");
  } else if (type == "general") {
    cfg.metric_kind = MetricKind::General;
    if (!metric.contains("g"))
      throw ConfigError("metric.g", "general metric requires g");
    cfg.g_json = metric.at("g");
  } else {
    throw ConfigError("metric.type",
                      "metric.type must be flat, conformal or general");
  }

  if (j.contains("grid")) cfg.grid_size = j.at("grid").value("M", 64);
  if (cfg.grid_size < 1) throw ConfigError("grid.M", "grid size must be >= 1");
  if (j.contains("rational")) {
    const Json& r = j.at("rational");
    if (!r.contains("p") || !r.contains("q"))
      throw ConfigError("rational", "rational requires p and q");
    cfg.rational = {r.at("p").get<int>(), r.at("q").get<int>()};
  }

  // Validate h eagerly so a bad config is rejected at load time.
  if (cfg.metric_kind == MetricKind::Conformal) {
    const ContextPtr ctx = cfg.make_context();
    const Element h = element_from_json(ctx, cfg.h_json);
    if (norm_l1(h - star(h)) > ctx->tol())
      throw ConfigError("metric.h", "h not self-adjoint");
  }
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ConfigError("<file>", std::string("config parse error: ") + e.what());
  }
  return config_from_json(j);
}

ContextPtr JobConfig::make_context() const {
  try {
    return TorusContext::make(n, theta, cutoff, working_cutoff, tol,
                              strict_truncation ? TruncationPolicy::Strict
                                                : TruncationPolicy::Project);
  } catch (const Error& e) {
    throw ConfigError("theta", e.what());
  }
}

Element JobConfig::conformal_factor(const ContextPtr& ctx) const {
  if (metric_kind != MetricKind::Conformal)
    throw ConfigError("metric", "conformal factor requested for a non-conformal metric");
  return element_from_json(ctx, h_json);
}

Metric JobConfig::build_metric(const ContextPtr& ctx) const {
  switch (metric_kind) {
    case MetricKind::Flat:
      return Metric::flat(ctx);
    case MetricKind::Conformal:
      return Metric::conformal(exp_sa(conformal_factor(ctx)).value);
    case MetricKind::General: {
      std::vector<Element> entries;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const std::string key = "g[" + std::to_string(j + 1) + "][" +
                                  std::to_string(k + 1) + "]";
          if (!g_json.contains(key))
            throw ConfigError("metric.g", "missing entry " + key);
          entries.push_back(element_from_json(ctx, g_json.at(key)));
        }
      return Metric(ctx, std::move(entries));
    }
  }
  throw Error("unreachable");
}

int run_curvature(const JobConfig& cfg, const std::string& output_dir) {
  const ContextPtr ctx = cfg.make_context();
  const Metric g = cfg.build_metric(ctx);
  const Connection lc = levi_civita(g);
  const CurvatureTensor r = curvature_tensor(lc, g, cfg.parallel);

  Json out;
  out["connection"] = connection_to_json(lc);
  out["curvature"] = curvature_to_json(r);
  Json norms;
  std::string csv = "component,norm,trace_re,trace_im\n";
  char buf[160];
  const int nn = ctx->dim();
  for (int j = 0; j < nn; ++j)
    for (int k = 0; k < nn; ++k)
      for (int l = 0; l < nn; ++l)
        for (int m = 0; m < nn; ++m) {
          const Element& c = r.at(j, k, l, m);
          const std::string key = "R[" + std::to_string(j + 1) + "][" +
                                  std::to_string(k + 1) + "][" +
                                  std::to_string(l + 1) + "][" +
                                  std::to_string(m + 1) + "]";
          norms[key] = norm_l1(c);
          const Complex t = trace(c);
          std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g\n",
                        key.c_str(), norm_l1(c), t.real(), t.imag());
          csv += buf;
        }
  out["component_norms"] = norms;
  out["truncation_tail"] = ctx->tail_consumed();

  std::filesystem::create_directories(output_dir);
  write_file(std::filesystem::path(output_dir) / "curvature.json", dump(out));
  write_file(std::filesystem::path(output_dir) / "summary.csv", csv);
  return kOk;
}

int run_checks(const JobConfig& cfg, const std::string& output_dir,
               bool inject_corruption) {
  const ContextPtr ctx = cfg.make_context();
  const Metric g = cfg.build_metric(ctx);
  Connection lc = levi_civita(g);
  if (inject_corruption)
    lc = lc.perturbed(0, 0, 0,
                      Element::generator(ctx, 0) * Complex(0.1));
  const CurvatureTensor r = curvature_tensor(lc, g, cfg.parallel);
  const ResidualReport res = identity_residuals(lc, g, r);

  // Algebra axiom spot checks on elements drawn from the metric data.
  const Element a = g.at(0, 0);
  const Element b = Element::generator(ctx, 0) + g.at(0, 0) * Complex(0.25);
  Json algebra;
  algebra["unit_law"] = norm_l1(a * Element::one(ctx) - a);
  algebra["associativity"] = norm_l1((a * b) * a - a * (b * a));
  algebra["star_anti_multiplicative"] =
      norm_l1(star(a * b) - star(b) * star(a));
  algebra["leibniz"] =
      norm_l1(derive(0, a * b) - derive(0, a) * b - a * derive(0, b));
  algebra["trace_derivation"] = std::abs(trace(derive(0, b)));

  const double threshold = 10.0 * ctx->tol();
  bool pass = res.max <= threshold;
  for (const auto& [name, v] : algebra.items())
    if (v.get<double>() > threshold) pass = false;

  Json out;
  out["residuals"] = residuals_to_json(res);
  out["algebra_spot_checks"] = algebra;
  out["threshold"] = threshold;
  out["metric_checks"] = Json::array();
  for (const CheckResult& c : validate_metric(g).checks)
    out["metric_checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  out["pass"] = pass;
  if (!pass) out["worst"] = res.worst();

  std::filesystem::create_directories(output_dir);
  write_file(std::filesystem::path(output_dir) / "residuals.json", dump(out));
  return pass ? kOk : kCheckFailure;
}

int run_gauss_bonnet(const JobConfig& cfg, const std::string& output_dir) {
  if (cfg.metric_kind != MetricKind::Conformal)
    throw ConfigError("metric", "gauss-bonnet requires conformal metric");
  const ContextPtr ctx = cfg.make_context();
  if (ctx->dim() != 2)
    throw ConfigError("n", "gauss-bonnet requires n = 2");
  const Element h = cfg.conformal_factor(ctx);
  const GaussBonnetResult gb = gauss_bonnet(h);

  Json out;
  out["value_re"] = gb.value.real();
  out["value_im"] = gb.value.imag();
  out["abs"] = std::abs(gb.value);
  out["budget"] = gb.budget;
  const bool pass = std::abs(gb.value) <= gb.budget;
  out["pass"] = pass;

  std::filesystem::create_directories(output_dir);
  write_file(std::filesystem::path(output_dir) / "gauss_bonnet.json",
             dump(out));
  return pass ? kOk : kCheckFailure;
}

int run_oracle(const JobConfig& cfg, const std::string& mode,
               const std::string& output_dir) {
  const ContextPtr ctx = cfg.make_context();
  std::filesystem::create_directories(output_dir);
  const std::filesystem::path dir(output_dir);

  if (mode == "classical") {
    const Element h = cfg.conformal_factor(ctx);
    const ClassicalCurvature cc = classical_curvature(h, cfg.grid_size);
    write_file(dir / "grid.csv", grid_to_csv(cc.r1212));
    write_file(dir / "grid_gaussian.csv", grid_to_csv(cc.gaussian));
    return kOk;
  }
  if (mode == "matrix-rep") {
    if (!cfg.rational)
      throw ConfigError("rational", "matrix-rep oracle requires rational {p,q}");
    const auto [p, q] = *cfg.rational;
    const MatrixRep rep = build_matrix_rep(p, q);
    const Complex w = std::polar(1.0, 2.0 * M_PI * p / q);
    Json out;
    out["p"] = p;
    out["q"] = q;
    out["relation_residual"] =
        (rep.u1 * rep.u2 - w * rep.u2 * rep.u1).norm();
    out["u1_unitarity"] =
        (rep.u1 * rep.u1.adjoint() -
         Eigen::MatrixXcd::Identity(q, q)).norm();
    out["u2_unitarity"] =
        (rep.u2 * rep.u2.adjoint() -
         Eigen::MatrixXcd::Identity(q, q)).norm();
    write_file(dir / "matrix_rep.json", dump(out));
    return kOk;
  }
  if (mode == "conformal-closed-form") {
    const Element h = cfg.conformal_factor(ctx);
    Json out;
    out["R[1][2][1][2]"] = element_to_json(conformal_closed_form(h));
    write_file(dir / "closed_form.json", dump(out));
    return kOk;
  }
  throw ConfigError("oracle", "unknown oracle mode: " + mode);
}

}  // namespace nct
