#include "nct/calculus.hpp"

#include <cmath>

namespace nct {

ExpResult exp_sa(const Element& h, double target, double budget) {
  const ContextPtr& ctx = h.context();
  if (norm_l1(h - star(h)) > ctx->tol())
    throw NotSelfAdjoint("not self-adjoint");

  const double nh = norm_l1(h);
  int s = 0;
  while (nh / std::pow(2.0, s) > 0.5) ++s;

  // Error amplification of the s squarings: each multiplies the l1 error by
  // roughly 2 ||e^{h/2^i}||, bounded by 2 e^{||h||/2^i}.
  double amp = 1.0;
  for (int i = 1; i <= s; ++i) amp *= 2.0 * std::exp(nh / std::pow(2.0, i));
  const double taylor_target = target / amp;

  const Element y = h * Complex(1.0 / std::pow(2.0, s));
  Element sum = Element::one(ctx);
  Element term = Element::one(ctx);
  double term_norm = 1.0;
  const double tail_before = ctx->tail_consumed();
  int k = 0;
  // With ||y||_1 <= 1/2 the tail of the series after term_k is bounded by
  // ||term_k||_1.
  while (term_norm > taylor_target && k < 200) {
    ++k;
    term = term * y * Complex(1.0 / k);
    sum = sum + term;
    term_norm = norm_l1(term);
  }
  double err = term_norm;

  Element cur = sum;
  for (int i = 0; i < s; ++i) {
    const double before = ctx->tail_consumed();
    Element next = cur * cur;
    const double step_tail = ctx->tail_consumed() - before;
    err = 2.0 * norm_l1(cur) * err + err * err + step_tail;
    cur = std::move(next);
  }
  err += ctx->tail_consumed() - tail_before;

  if (err > budget)
    throw TruncationBudget("truncation budget exceeded: tail bound " +
                           std::to_string(err));
  return {cur, err};
}

Element invert(const Element& a) {
  const ContextPtr& ctx = a.context();
  const Complex tau = trace(a);
  if (std::abs(tau) < 1e-14)
    throw NotInvertible("not invertible by Neumann series: zero trace");
  const Element r = Element::one(ctx) - a * (Complex(1.0) / tau);
  const double nr = norm_l1(r);
  if (nr >= 1.0)
    throw NotInvertible("not invertible by Neumann series: ||1 - a/tau(a)|| = " +
                        std::to_string(nr));
  Element sum = Element::one(ctx);
  Element pw = Element::one(ctx);
  const double stop = ctx->tol() * (1.0 - nr);
  for (int k = 0; k < 100000; ++k) {
    pw = pw * r;
    const double npw = norm_l1(pw);
    if (npw < TorusContext::kDropThreshold) break;
    sum = sum + pw;
    if (npw <= stop) break;
  }
  return sum * (Complex(1.0) / tau);
}

}  // namespace nct
