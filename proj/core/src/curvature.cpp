#include "nct/curvature.hpp"

#include <algorithm>
#include <future>
#include <vector>

namespace nct {

CurvatureTensor::CurvatureTensor(const ContextPtr& ctx,
                                 std::vector<Element> components)
    : ctx_(ctx), components_(std::move(components)) {
  const int n = ctx->dim();
  if (static_cast<int>(components_.size()) != n * n * n * n)
    throw Error("curvature tensor needs n^4 components");
}

VectorField curvature_operator(const Connection& c, const Derivation& x,
                               const Derivation& y, const VectorField& z) {
  const VectorField nx = connection_apply(c, x, z);
  const VectorField ny = connection_apply(c, y, z);
  VectorField out =
      connection_apply(c, y, nx) - connection_apply(c, x, ny);
  const Derivation bracket = derivation_bracket(x, y);
  if (!bracket.inner_part().is_zero())
    out = out + connection_apply(c, bracket, z);
  return out;
}

CurvatureTensor curvature_tensor(const Connection& c, const Metric& g,
                                 bool parallel) {
  const ContextPtr& ctx = c.context();
  const int n = ctx->dim();
  std::vector<Element> comps(static_cast<size_t>(n) * n * n * n,
                             Element::zero(ctx));

  auto compute_pair = [&](int j, int k) {
    const Derivation dj = Derivation::basis(ctx, j);
    const Derivation dk = Derivation::basis(ctx, k);
    for (int l = 0; l < n; ++l) {
      // [d_j, d_k] = 0, so only the two composition terms contribute.
      const VectorField zl = VectorField::basis(ctx, l);
      const VectorField rz =
          connection_apply(c, dk, connection_apply(c, dj, zl)) -
          connection_apply(c, dj, connection_apply(c, dk, zl));
      for (int m = 0; m < n; ++m) {
        Element acc = Element::zero(ctx);
        for (int p = 0; p < n; ++p) acc = acc + rz.coeff(p) * g.at(p, m);
        comps[((static_cast<size_t>(j) * n + k) * n + l) * n + m] =
            std::move(acc);
      }
    }
  };

  if (parallel) {
    std::vector<std::future<void>> jobs;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        jobs.push_back(
            std::async(std::launch::async, compute_pair, j, k));
    for (auto& job : jobs) job.get();
  } else {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) compute_pair(j, k);
  }
  return CurvatureTensor(ctx, std::move(comps));
}

std::map<std::string, double> ResidualReport::as_map() const {
  return {{"torsion", torsion},
          {"compatibility", compatibility},
          {"pairing_self_adjoint", pairing_self_adjoint},
          {"bianchi", bianchi},
          {"antisymmetry", antisymmetry},
          {"max", max}};
}

std::string ResidualReport::worst() const {
  std::string name = "torsion";
  double best = torsion;
  for (const auto& [k, v] : as_map()) {
    if (k == "max") continue;
    if (v > best) {
      best = v;
      name = k;
    }
  }
  return name;
}

ResidualReport identity_residuals(const Connection& c, const Metric& g,
                                  const CurvatureTensor& r) {
  const ContextPtr& ctx = c.context();
  const int n = ctx->dim();
  ResidualReport out;

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out.torsion = std::max(
          out.torsion, norm_l1(c.christoffel(j, k) - c.christoffel(k, j)));

  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        const Element t1 = metric_pairing(g, c.christoffel(j, k),
                                          VectorField::basis(ctx, l));
        Element t2 = Element::zero(ctx);
        for (int p = 0; p < n; ++p)
          t2 = t2 + g.at(k, p) * star(c.christoffel(j, l).coeff(p));
        out.compatibility = std::max(
            out.compatibility, norm_l1(derive(j, g.at(k, l)) - t1 - t2));
        out.pairing_self_adjoint =
            std::max(out.pairing_self_adjoint, norm_l1(t1 - star(t1)));
      }
    }
  }

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          out.bianchi = std::max(
              out.bianchi, norm_l1(r.at(j, k, l, m) + r.at(k, l, j, m) +
                                   r.at(l, j, k, m)));
          out.antisymmetry = std::max(
              out.antisymmetry,
              norm_l1(r.at(j, k, l, m) + r.at(k, j, l, m)));
        }

  out.max = std::max({out.torsion, out.compatibility,
                      out.pairing_self_adjoint, out.bianchi,
                      out.antisymmetry});
  return out;
}

GaussBonnetResult gauss_bonnet(const Element& h) {
  const ContextPtr& ctx = h.context();
  if (ctx->dim() != 2) throw Error("gauss-bonnet requires n = 2");
  const ExpResult eh = exp_sa(h);
  const ExpResult eh_inv = exp_sa(-h);
  const Metric g = Metric::conformal(eh.value);
  const Connection lc = levi_civita(g);
  const CurvatureTensor r = curvature_tensor(lc, g);
  const Element integrand = r.at(0, 1, 0, 1) * eh_inv.value;
  const double rnorm = norm_l1(r.at(0, 1, 0, 1));
  const double budget =
      10.0 * (eh.error_bound + eh_inv.error_bound) * std::max(1.0, rnorm) +
      10.0 * ctx->tol();
  return {trace(integrand), budget};
}

}  // namespace nct
