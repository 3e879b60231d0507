// Serial reference against the OpenMP kernels.
//
//   ./bench_kernels --benchmark_filter=Step
//   OMP_NUM_THREADS=8 ./bench_kernels

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qwalk/kernels.hpp"
#include "qwalk/ksup.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/noise.hpp"

using namespace qwalk;

namespace {

const double kH = 1.0 / std::numbers::sqrt2;

std::vector<Spinor> field(std::size_t n) {
  std::mt19937_64 g(1);
  std::normal_distribution<double> d;
  std::vector<Spinor> v(n);
  for (auto& s : v) s = {cplx(d(g), d(g)), cplx(d(g), d(g))};
  return v;
}

template <bool Parallel>
void BM_CoinThenShift(benchmark::State& st) {
  const auto in = field(static_cast<std::size_t>(st.range(0)));
  std::vector<Spinor> out(in.size() + 2);
  const Mat2 u = make_coin(kH, kH).matrix();
  for (auto _ : st) {
    if constexpr (Parallel) {
      kernels::omp::coin_then_shift(in, out, u);
    } else {
      kernels::serial::coin_then_shift(in, out, u);
    }
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_Step(benchmark::State& st) {
  const WalkParams p = WalkParams::with_field(2.0 * std::numbers::pi * 0.618, kH, kH);
  const WalkState s(0, field(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) {
    benchmark::DoNotOptimize(step(s, 7, p, Parallel ? Execution::parallel : Execution::serial));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_KSweep(benchmark::State& st) {
  const WalkParams p = WalkParams::rational(1, 16, kH, kH);
  const long steps = st.range(0);
  for (auto _ : st) {
    benchmark::DoNotOptimize(sup_over_k(
        [&](double k) { return operator_norm(regrouped_block(k, p, steps).matrix() + Mat2::identity()); },
        Parallel ? Execution::parallel : Execution::serial));
  }
}

template <bool Parallel>
void BM_Ensemble(benchmark::State& st) {
  const WalkParams p = WalkParams::rational(1, 100, kH, kH);
  const NoiseConfig noise{1e-3, NoiseDistribution::symmetric, 1, static_cast<int>(st.range(0))};
  for (auto _ : st) {
    benchmark::DoNotOptimize(return_series(p, noise, 100, WalkState::localized(0),
                                           Parallel ? Execution::parallel : Execution::serial));
  }
}

}  // namespace

BENCHMARK(BM_CoinThenShift<false>)->Name("CoinThenShift/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_CoinThenShift<true>)->Name("CoinThenShift/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Step<false>)->Name("Step/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Step<true>)->Name("Step/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_KSweep<false>)->Name("KSweep/serial")->Arg(16)->Arg(160);
BENCHMARK(BM_KSweep<true>)->Name("KSweep/omp")->Arg(16)->Arg(160);
BENCHMARK(BM_Ensemble<false>)->Name("Ensemble/serial")->Arg(16)->Arg(64);
BENCHMARK(BM_Ensemble<true>)->Name("Ensemble/omp")->Arg(16)->Arg(64);

BENCHMARK_MAIN();
