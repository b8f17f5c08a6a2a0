#include <benchmark/benchmark.h>

#include <random>

#include "nct/curvature.hpp"

using namespace nct;

namespace {

Element dense_self_adjoint(const ContextPtr& ctx, int box, double scale) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Element a = Element::zero(ctx);
  for (int m1 = -box; m1 <= box; ++m1)
    for (int m2 = -box; m2 <= box; ++m2)
      a = a + Element::monomial(ctx, {m1, m2},
                                scale * Complex(unif(rng), unif(rng)));
  return (a + star(a)) * Complex(0.5);
}

void BM_Multiply(benchmark::State& state) {
  const ContextPtr ctx = TorusContext::make2d(0.3, 16);
  const int box = static_cast<int>(state.range(0));
  const Element a = dense_self_adjoint(ctx, box, 0.1);
  const Element b = dense_self_adjoint(ctx, box, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4)->Arg(8);

void BM_Exp(benchmark::State& state) {
  const ContextPtr ctx = TorusContext::make2d(0.3, 8);
  const Element h = dense_self_adjoint(ctx, 2, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(exp_sa(h).value);
}
BENCHMARK(BM_Exp);

void BM_LeviCivita(benchmark::State& state) {
  const ContextPtr ctx = TorusContext::make2d(0.3, 8);
  const Metric g = Metric::conformal(exp_sa(dense_self_adjoint(ctx, 2, 0.1)).value);
  for (auto _ : state) benchmark::DoNotOptimize(levi_civita(g));
}
BENCHMARK(BM_LeviCivita);

void BM_CurvatureTensor(benchmark::State& state) {
  const ContextPtr ctx = TorusContext::make2d(0.3, 8);
  const Metric g = Metric::conformal(exp_sa(dense_self_adjoint(ctx, 2, 0.1)).value);
  const Connection lc = levi_civita(g);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(curvature_tensor(lc, g, parallel));
}
BENCHMARK(BM_CurvatureTensor)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
