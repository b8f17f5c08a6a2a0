#include "nct/metric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "nct/oracle_grid.hpp"
#include "nct/oracle_rep.hpp"

namespace nct {

Metric::Metric(const ContextPtr& ctx, std::vector<Element> entries)
    : ctx_(ctx), entries_(std::move(entries)) {
  const int n = ctx->dim();
  if (static_cast<int>(entries_.size()) != n * n)
    throw Error("metric needs n*n entries");
  for (const Element& e : entries_)
    if (e.context() != ctx_) throw ContextMismatch();
}

Metric Metric::flat(const ContextPtr& ctx) {
  const int n = ctx->dim();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      entries.push_back(j == k ? Element::one(ctx) : Element::zero(ctx));
  return Metric(ctx, std::move(entries));
}

Metric Metric::conformal(const Element& w) {
  const ContextPtr& ctx = w.context();
  const int n = ctx->dim();
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      entries.push_back(j == k ? w : Element::zero(ctx));
  return Metric(ctx, std::move(entries));
}

Element metric_pairing(const Metric& g, const VectorField& X,
                       const VectorField& Y) {
  if (X.context() != g.context() || Y.context() != g.context())
    throw ContextMismatch();
  Element out = Element::zero(g.context());
  const int n = g.dim();
  for (int j = 0; j < n; ++j) {
    if (X.coeff(j).is_zero()) continue;
    for (int k = 0; k < n; ++k) {
      if (Y.coeff(k).is_zero() || g.at(j, k).is_zero()) continue;
      out = out + X.coeff(j) * g.at(j, k) * star(Y.coeff(k));
    }
  }
  return out;
}

bool MetricReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* MetricReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

bool theta_is_zero(const TorusContext& ctx) {
  for (double v : ctx.theta_flat())
    if (v != 0.0) return false;
  return true;
}

// Smallest eigenvalue of the hermitian part across the block matrix of the
// metric in a finite representation: grid evaluation at Theta = 0, clock and
// shift at a rational approximation of theta otherwise. Returns false if no
// representation is available.
bool heuristic_min_eigenvalue(const Metric& g, double* min_eig) {
  const TorusContext& ctx = *g.context();
  const int n = ctx.dim();
  if (n != 2) return false;
  if (theta_is_zero(ctx)) {
    const int M = 32;
    std::vector<GridFunction> grids;
    grids.reserve(n * n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) grids.push_back(evaluate_grid(g.at(j, k), M));
    double lo = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < grids.front().values.size(); ++i) {
      Eigen::MatrixXcd a(n, n);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) a(j, k) = grids[j * n + k].values[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          0.5 * (a + a.adjoint().eval()));
      lo = std::min(lo, es.eigenvalues().minCoeff());
    }
    *min_eig = lo;
    return true;
  }
  const auto [p, q] = rational_approx(ctx.theta(0, 1), 64);
  if (q < 2) return false;
  const MatrixRep rep = build_matrix_rep(p, q);
  Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n * q, n * q);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      block.block(j * q, k * q, q, q) = represent_at(g.at(j, k), rep);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (block + block.adjoint().eval()));
  *min_eig = es.eigenvalues().minCoeff();
  return true;
}

}  // namespace

MetricReport validate_metric(const Metric& g) {
  const TorusContext& ctx = *g.context();
  const int n = ctx.dim();
  const double tol = ctx.tol();
  MetricReport report;

  double sa = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      sa = std::max(sa, norm_l1(g.at(j, k) - star(g.at(j, k))));
  report.checks.push_back({"self_adjoint", sa <= tol, sa});

  double sym = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      sym = std::max(sym, norm_l1(g.at(j, k) - g.at(k, j)));
  report.checks.push_back({"symmetry", sym <= tol, sym});

  Eigen::MatrixXcd tau(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) tau(j, k) = trace(g.at(j, k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (tau + tau.adjoint().eval()));
  const double min_eig = es.eigenvalues().minCoeff();
  report.checks.push_back(
      {"tau_positive_definite", min_eig > 0.0, std::max(0.0, -min_eig)});

  double hmin = 0.0;
  if (heuristic_min_eigenvalue(g, &hmin)) {
    report.checks.push_back(
        {"positivity_heuristic", hmin > -1e-9, std::max(0.0, -hmin)});
  }
  return report;
}

}  // namespace nct
