#include <benchmark/benchmark.h>

#include "hh/bounds.hpp"
#include "hh/convexity.hpp"
#include "hh/means.hpp"
#include "hh/quad.hpp"

namespace {

void BM_ExprEval(benchmark::State& state) {
  hh::Expr f = hh::Expr::parse("exp(0.7*x^2-0.5*x+0.25)");
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.eval(x).value);
    x += 1e-9;
  }
}
BENCHMARK(BM_ExprEval);

void BM_Integrate(benchmark::State& state) {
  hh::Expr f = hh::Expr::parse("exp(0.7*x^2-0.5*x+0.25)");
  hh::Interval iv(0.1, 2.9);
  for (auto _ : state)
    benchmark::DoNotOptimize(hh::integrate(f, iv).value);
}
BENCHMARK(BM_Integrate);

void BM_Certify(benchmark::State& state) {
  hh::Expr f = hh::Expr::parse("exp(0.7*x^2-0.5*x+0.25)");
  hh::Interval iv(0.1, 2.9);
  hh::GridSpec grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(0) / 2 + 1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(hh::certify(f, {hh::ClassKind::log_convex}, iv, grid).verdict);
}
BENCHMARK(BM_Certify)->Arg(21)->Arg(41);

void BM_LogMean(benchmark::State& state) {
  double p = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hh::log_mean(p, 2.5));
    p += 1e-12;
  }
}
BENCHMARK(BM_LogMean);

void BM_GillBound(benchmark::State& state) {
  hh::Expr f = hh::Expr::parse("exp(0.7*x^2-0.5*x+0.25)");
  hh::Interval iv(0.1, 2.9);
  for (auto _ : state)
    benchmark::DoNotOptimize(hh::gill_bound(f, iv).margin);
}
BENCHMARK(BM_GillBound);

}  // namespace

BENCHMARK_MAIN();
