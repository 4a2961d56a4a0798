#include <benchmark/benchmark.h>

#include "locmaass/evaluators.hpp"
#include "locmaass/qforms.hpp"
#include "locmaass/specfun.hpp"
#include "locmaass/theta.hpp"

using namespace locmaass;

static void BM_EnumerateDiscForms(benchmark::State &state) {
  const double X = static_cast<double>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    const auto forms = enumerate_disc_forms({0.13, 0.97}, 5, X);
    n = forms.size();
    benchmark::DoNotOptimize(forms.data());
  }
  state.counters["forms"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateDiscForms)->RangeMultiplier(4)->Range(256, 65536);

static void BM_Hyp2F1(benchmark::State &state) {
  const Hypergeometric2F1 h({1.25, 0.3}, {0.75, 0.0}, {2.0, 0.3});
  double w = 0.0;
  for (auto _ : state) {
    w += 0.0009765625;
    if (w >= 1.0)
      w = 0.0;
    benchmark::DoNotOptimize(h(w));
  }
}
BENCHMARK(BM_Hyp2F1);

static void BM_EvalF(benchmark::State &state) {
  const KernelParams p{2, {1.75, 0.0}, 5};
  const double X = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_f(p, {0.21, 1.1}, SumConfig::fixed(X)).value);
}
BENCHMARK(BM_EvalF)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

static void BM_EvalFHarmonic(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_F_harmonic(2, 5, {0.21, 1.1}, SumConfig::fixed(4096)).value);
}
BENCHMARK(BM_EvalFHarmonic)->Unit(benchmark::kMillisecond);

static void BM_Theta(benchmark::State &state) {
  const ThetaPoint pt{{0.25, 1.0}, {0.1, 1.0 / static_cast<double>(state.range(0))}};
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_theta(2, pt));
}
BENCHMARK(BM_Theta)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
