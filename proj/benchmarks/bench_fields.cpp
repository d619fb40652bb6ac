#include <benchmark/benchmark.h>

#include <cmath>

#include "airylab/constants.hpp"
#include "airylab/dyadic.hpp"
#include "airylab/maximize.hpp"
#include "airylab/norms.hpp"
#include "airylab/propagators.hpp"

using namespace airylab;

namespace {

FreqProfile gaussian(std::size_t n) {
  return FreqProfile::sample(FreqGrid(-3.5, 3.5, n), [](double xi) { return cplx{std::exp(-0.5 * xi * xi), 0.0}; });
}

void BM_AiryField(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FreqProfile u = gaussian(n);
  const SpaceTimeGrid g = SpaceTimeGrid::centered(4.0, 257, 70.0, 257);
  for (auto _ : state) benchmark::DoNotOptimize(airy_extension(u, 1.0 / 6.0, g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * 257 * 257));
}
BENCHMARK(BM_AiryField)->Arg(65)->Arg(193)->Arg(385)->Unit(benchmark::kMillisecond);

void BM_KernelNormPower(benchmark::State& state) {
  const ExtensionKernel k = airy_kernel(gaussian(193), 1.0 / 6.0);
  const SpaceTimeGrid g = SpaceTimeGrid::centered(4.0, 337, 70.0, 467);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_norm_power(k, g, 6.0, 6.0));
}
BENCHMARK(BM_KernelNormPower)->Unit(benchmark::kMillisecond);

void BM_MixedNorm(benchmark::State& state) {
  const SpaceTimeGrid g = SpaceTimeGrid::centered(4.0, 513, 70.0, 513);
  const SpaceTimeField f = schrodinger_extension(gaussian(129), g);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_norm(f, 8.0, 4.0));
}
BENCHMARK(BM_MixedNorm)->Unit(benchmark::kMillisecond);

void BM_QuotientGradient(benchmark::State& state) {
  const ThresholdGrids tg;
  const FreqProfile u = FreqProfile::sample(tg.freq, [](double xi) { return cplx{std::exp(-0.5 * xi * xi), 0.0}; });
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_gradient(u, Objective::airy_critical, critical_exponents(6.0), tg.airy));
  }
}
BENCHMARK(BM_QuotientGradient)->Unit(benchmark::kMillisecond);

void BM_CosineAverage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cosine_average(cplx(0.3, 0.7), cplx(-0.2, 0.5), 6.0));
}
BENCHMARK(BM_CosineAverage);

void BM_OverlapScan(benchmark::State& state) {
  const auto fam = sim_pairs_in_window(static_cast<int>(state.range(0)), -2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(parallelogram_overlap(fam, {1, 100}));
}
BENCHMARK(BM_OverlapScan)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
