#include "nct/oracle_grid.hpp"

#include <cmath>

namespace nct {

namespace {

bool theta_is_zero(const TorusContext& ctx) {
  for (double v : ctx.theta_flat())
    if (v != 0.0) return false;
  return true;
}

}  // namespace

GridFunction evaluate_grid(const Element& a, int size) {
  const TorusContext& ctx = *a.context();
  if (ctx.dim() != 2) throw Error("grid evaluation is only defined for n = 2");
  if (!theta_is_zero(ctx)) throw Error("not commutative");
  if (size < 1) throw Error("grid size must be >= 1");
  GridFunction g;
  g.size = size;
  g.values.assign(static_cast<size_t>(size) * size, Complex(0.0));
  for (int p = 0; p < size; ++p) {
    for (int q = 0; q < size; ++q) {
      Complex v = 0.0;
      const double x1 = static_cast<double>(p) / size;
      const double x2 = static_cast<double>(q) / size;
      for (const auto& [m, c] : a.coeffs())
        v += c * std::polar(1.0, 2.0 * M_PI * (m[0] * x1 + m[1] * x2));
      g.values[static_cast<size_t>(p) * size + q] = v;
    }
  }
  return g;
}

ClassicalCurvature classical_curvature(const Element& h, int size) {
  const ContextPtr& ctx = h.context();
  if (norm_l1(h - star(h)) > ctx->tol())
    throw NotSelfAdjoint("conformal factor not self-adjoint");
  Element lap = Element::zero(ctx);
  for (const auto& [m, c] : h.coeffs()) {
    const double k2 =
        4.0 * M_PI * M_PI * (static_cast<double>(m[0]) * m[0] +
                             static_cast<double>(m[1]) * m[1]);
    if (k2 == 0.0) continue;
    lap = lap + Element::monomial(ctx, m, -k2 * c);
  }
  const GridFunction hg = evaluate_grid(h, size);
  const GridFunction lapg = evaluate_grid(lap, size);
  ClassicalCurvature out;
  out.gaussian.size = size;
  out.r1212.size = size;
  out.gaussian.values.resize(hg.values.size());
  out.r1212.values.resize(hg.values.size());
  for (size_t i = 0; i < hg.values.size(); ++i) {
    const double hx = hg.values[i].real();
    const Complex k = -0.5 * std::exp(-hx) * lapg.values[i];
    out.gaussian.values[i] = k;
    out.r1212.values[i] = std::exp(2.0 * hx) * k;
  }
  return out;
}

}  // namespace nct
