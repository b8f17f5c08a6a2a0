#include "doctest.h"

#include <cmath>

#include "nct/metric.hpp"
#include "nct/oracle_conformal.hpp"
#include "nct/oracle_grid.hpp"
#include "nct/oracle_rep.hpp"
#include "test_support.hpp"

using namespace nct;
using nct::testing::random_element;

TEST_CASE("grid evaluation basics") {
  const ContextPtr flat = TorusContext::make2d(0.0, 8);
  const GridFunction ones = evaluate_grid(Element::one(flat), 16);
  for (const Complex& v : ones.values) CHECK(std::abs(v - 1.0) < 1e-14);

  const Element u1 = Element::generator(flat, 0);
  const GridFunction cosx = evaluate_grid(u1 + star(u1), 32);
  for (int p = 0; p < 32; ++p)
    for (int q = 0; q < 32; ++q)
      CHECK(std::abs(cosx.at(p, q) -
                     Complex(2.0 * std::cos(2.0 * M_PI * p / 32.0))) < 1e-12);

  const ContextPtr curved = TorusContext::make2d(0.3, 4);
  CHECK_THROWS_AS(evaluate_grid(Element::one(curved), 8), Error);
}

TEST_CASE("evaluation is a homomorphism at theta = 0") {
  const ContextPtr flat = TorusContext::make2d(0.0, 8);
  std::mt19937 rng(71);
  for (int i = 0; i < 10; ++i) {
    const Element a = random_element(flat, rng, 3, 6);
    const Element b = random_element(flat, rng, 3, 6);
    const GridFunction ga = evaluate_grid(a, 16);
    const GridFunction gb = evaluate_grid(b, 16);
    const GridFunction gab = evaluate_grid(a * b, 16);
    for (size_t n = 0; n < gab.values.size(); ++n)
      CHECK(std::abs(gab.values[n] - ga.values[n] * gb.values[n]) < 1e-11);
  }
}

TEST_CASE("classical curvature oracle") {
  const ContextPtr flat = TorusContext::make2d(0.0, 8);
  const ClassicalCurvature zero =
      classical_curvature(Element::zero(flat), 8);
  for (const Complex& v : zero.gaussian.values) CHECK(std::abs(v) == 0.0);

  // h = 0.2 (U1 + U1*), i.e. h(x) = 0.4 cos(2 pi x1):
  // K(0,0) = -1/2 e^{-0.4} (-1.6 pi^2) = 0.8 pi^2 e^{-0.4}.
  const Element u1 = Element::generator(flat, 0);
  const Element h = (u1 + star(u1)) * Complex(0.2);
  const ClassicalCurvature cc = classical_curvature(h, 16);
  const double expect = 0.8 * M_PI * M_PI * std::exp(-0.4);
  CHECK(std::abs(cc.gaussian.at(0, 0) - Complex(expect)) < 1e-12);
}

TEST_CASE("clock and shift matrices") {
  const MatrixRep pauli = build_matrix_rep(1, 2);
  CHECK(std::abs(pauli.u1(0, 0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(pauli.u1(1, 1) - Complex(-1.0)) < 1e-15);
  CHECK((pauli.u1 * pauli.u2 + pauli.u2 * pauli.u1).norm() < 1e-14);

  for (int q : {3, 5, 17, 64}) {
    const int p = q == 64 ? 13 : 2;
    const MatrixRep rep = build_matrix_rep(p, q);
    const Complex w = std::polar(1.0, 2.0 * M_PI * p / q);
    CHECK((rep.u1 * rep.u2 - w * rep.u2 * rep.u1).norm() < 1e-13);
    CHECK((rep.u1 * rep.u1.adjoint() -
           Eigen::MatrixXcd::Identity(q, q)).norm() < 1e-13);
    CHECK((rep.u2 * rep.u2.adjoint() -
           Eigen::MatrixXcd::Identity(q, q)).norm() < 1e-13);
  }

  CHECK_THROWS_AS(build_matrix_rep(2, 4), Error);
  CHECK_THROWS_AS(build_matrix_rep(1, 1), Error);
}

TEST_CASE("representation is a *-homomorphism at rational theta") {
  const int p = 13, q = 64;
  const ContextPtr ctx =
      TorusContext::make2d(static_cast<double>(p) / q, 8);
  const MatrixRep rep = build_matrix_rep(p, q);
  CHECK((represent(Element::one(ctx), rep) -
         Eigen::MatrixXcd::Identity(q, q)).norm() < 1e-15);

  std::mt19937 rng(73);
  for (int i = 0; i < 30; ++i) {
    const Element a = random_element(ctx, rng, 4, 6);
    const Element b = random_element(ctx, rng, 4, 6);
    CHECK((represent(a * b, rep) - represent(a, rep) * represent(b, rep))
              .norm() < 1e-12);
    CHECK((represent(star(a), rep) -
           represent(a, rep).adjoint()).norm() < 1e-12);
  }

  const ContextPtr wrong = TorusContext::make2d(0.31, 8);
  CHECK_THROWS_AS(represent(Element::one(wrong), rep), Error);
}

TEST_CASE("matrix trace matches the canonical trace below the modulus") {
  const int p = 2, q = 17;
  const ContextPtr ctx =
      TorusContext::make2d(static_cast<double>(p) / q, 8);
  const MatrixRep rep = build_matrix_rep(p, q);
  std::mt19937 rng(79);
  for (int i = 0; i < 20; ++i) {
    const Element a = random_element(ctx, rng, 8, 10);
    const Complex mtrace = represent(a, rep).trace() / static_cast<double>(q);
    CHECK(std::abs(mtrace - trace(a)) < 1e-12);
  }
}

TEST_CASE("positivity transfers from the representation") {
  const int p = 13, q = 64;
  const ContextPtr ctx =
      TorusContext::make2d(static_cast<double>(p) / q, 8);
  const Element u1 = Element::generator(ctx, 0);
  const Element h = (u1 + star(u1)) * Complex(0.3);
  const Element eh = exp_sa(h).value;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      represent(eh, build_matrix_rep(p, q)));
  CHECK(es.eigenvalues().minCoeff() > 0.05);
  const MetricReport report = validate_metric(Metric::conformal(eh));
  const CheckResult* heur = report.find("positivity_heuristic");
  REQUIRE(heur != nullptr);
  CHECK(heur->pass);
}

TEST_CASE("closed-form curvature traces to zero against e^{-h}") {
  const ContextPtr ctx = TorusContext::make2d(0.3, 8);
  CHECK(conformal_closed_form(Element::zero(ctx)).is_zero());

  const Element u1 = Element::generator(ctx, 0);
  const Element h = (u1 + star(u1)) * Complex(0.3);
  const Element r = conformal_closed_form(h);
  CHECK(norm_l1(r) > 0.1);  // nontrivial curvature
  CHECK(std::abs(trace(r * exp_sa(-h).value)) < 1e-8);
}
