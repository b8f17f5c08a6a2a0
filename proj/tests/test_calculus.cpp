#include "doctest.h"

#include <cmath>

#include "nct/calculus.hpp"
#include "test_support.hpp"

using namespace nct;

namespace {
const ContextPtr ctx = TorusContext::make2d(0.3, 8);

Element cos_factor(const ContextPtr& c, int axis, double amp) {
  const Element u = Element::generator(c, axis);
  return (u + star(u)) * Complex(amp);
}
}  // namespace

TEST_CASE("exponential of zero and scalars") {
  const ExpResult e0 = exp_sa(Element::zero(ctx));
  CHECK(norm_l1(e0.value - Element::one(ctx)) == 0.0);

  const ExpResult e2 = exp_sa(Element::scalar(ctx, 1.7));
  CHECK(std::abs(trace(e2.value) - Complex(std::exp(1.7))) < 1e-12);
  CHECK(norm_l1(e2.value) == doctest::Approx(std::exp(1.7)).epsilon(1e-12));
}

TEST_CASE("exponential inverse identity") {
  const Element h = cos_factor(ctx, 0, 0.3);
  const ExpResult eh = exp_sa(h);
  const ExpResult ehm = exp_sa(-h);
  const double res = norm_l1(eh.value * ehm.value - Element::one(ctx));
  CHECK(res <= eh.error_bound + ehm.error_bound + 1e-12);
  CHECK(res < 1e-10);
  // Result is self-adjoint within the reported bound.
  CHECK(norm_l1(eh.value - star(eh.value)) <= eh.error_bound + 1e-13);
}

TEST_CASE("exponential of a two-axis factor matches the scalar case at theta=0") {
  // At theta = 0 with h supported on one axis the series is the modified
  // Bessel expansion: tau(e^{t(U+U*)}) = I_0(2t).
  const ContextPtr flat = TorusContext::make2d(0.0, 8, 24);
  const Element h = cos_factor(flat, 0, 0.4);
  const ExpResult eh = exp_sa(h);
  // I_0(0.8), frozen from the series sum_k (0.4^{2k}) / (k!)^2.
  double i0 = 0.0;
  double term = 1.0;
  for (int k = 0; 2 * k <= 24; ++k) {
    i0 += term;
    term *= 0.4 * 0.4 / ((k + 1.0) * (k + 1.0));
  }
  CHECK(std::abs(trace(eh.value) - Complex(i0)) < 1e-10);
}

TEST_CASE("exponential rejects non-self-adjoint input") {
  const Element u1 = Element::generator(ctx, 0);
  CHECK_THROWS_AS(exp_sa(u1), NotSelfAdjoint);
}

TEST_CASE("Neumann inversion") {
  CHECK(norm_l1(invert(Element::one(ctx)) - Element::one(ctx)) == 0.0);
  const Element two = Element::scalar(ctx, 2.0);
  CHECK(norm_l1(invert(two) - Element::scalar(ctx, 0.5)) < 1e-14);

  const Element h = cos_factor(ctx, 1, 0.2);
  const Element eh = exp_sa(h).value;
  const Element byneumann = invert(eh);
  const Element byexp = exp_sa(-h).value;
  CHECK(norm_l1(byneumann - byexp) < 1e-8);
  CHECK(norm_l1(eh * byneumann - Element::one(ctx)) < 1e-8);
  CHECK(norm_l1(byneumann * eh - Element::one(ctx)) < 1e-8);
}

TEST_CASE("inversion refuses out-of-range input") {
  CHECK_THROWS_AS(invert(Element::generator(ctx, 0)), NotInvertible);
  const Element bad =
      Element::one(ctx) + (Element::generator(ctx, 0) +
                           star(Element::generator(ctx, 0))) * Complex(2.0);
  CHECK_THROWS_AS(invert(bad), NotInvertible);
}
