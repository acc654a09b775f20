#include <benchmark/benchmark.h>

#include "qsinc/bilateral.hpp"
#include "qsinc/identities.hpp"
#include "qsinc/qcore.hpp"
#include "qsinc/quadrature.hpp"
#include "qsinc/sweep.hpp"

using namespace qsinc;

namespace {

SeriesParams sample(double q) {
  return SeriesParams::make(QParams::make(0.5 * q, q), 0.2, 0.3, Complex{0.5, 0.5});
}

void BM_QPochInf(benchmark::State& state) {
  const double q = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_inf(Complex{0.3, 0.2}, q));
}
BENCHMARK(BM_QPochInf)->Arg(30)->Arg(60)->Arg(90);

void BM_MainSeries(benchmark::State& state) {
  const auto params = sample(static_cast<double>(state.range(0)) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(main_series(params));
}
BENCHMARK(BM_MainSeries)->Arg(40)->Arg(80);

void BM_MainIntegral(benchmark::State& state) {
  const auto params = sample(static_cast<double>(state.range(0)) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(main_integral(params));
}
BENCHMARK(BM_MainIntegral)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_Sweep27(benchmark::State& state) {
  ParamGrid grid;
  grid.axes = {{"a", {0.2}},
               {"b", {0.3}},
               {"q", {0.4, 0.6, 0.8}},
               {"ratio", {0.3, 0.5, 0.7}},
               {"z", {1.0, Complex{0.5, 0.5}, 2.0}}};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(IdentityId::Main, grid, 1e-7, {}, {}, threads));
  }
}
BENCHMARK(BM_Sweep27)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
