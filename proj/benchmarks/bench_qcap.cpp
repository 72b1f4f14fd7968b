#include <benchmark/benchmark.h>

#include "qcap/qcap.hpp"

using namespace qcap;

namespace {

const SystemLayout kFour{{"A", 2}, {"B", 2}, {"A'", 2}, {"B'", 2}};

void BM_PartialTrace(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const SystemLayout layout{{"A", side}, {"B", side}, {"C", 2}};
  const auto rho = random_density(layout, 1);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, {"A", "C"}));
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8);

void BM_Entropy(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto rho = random_density(SystemLayout::single("A", dim), 2);
  for (auto _ : state) benchmark::DoNotOptimize(vn_entropy(rho));
}
BENCHMARK(BM_Entropy)->Arg(4)->Arg(16)->Arg(64);

void BM_PditConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(random_private_pbit(2, 3));
}
BENCHMARK(BM_PditConstruction);

void BM_ErasureProtocol(benchmark::State& state) {
  const auto gamma = random_private_pbit(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_crosscheck_erasure_protocol(0.5, gamma));
}
BENCHMARK(BM_ErasureProtocol);

void BM_ConditionalEntropy16(benchmark::State& state) {
  const auto rho = random_density(kFour, 4);
  for (auto _ : state) benchmark::DoNotOptimize(conditional_entropy(rho, {"B", "B'"}));
}
BENCHMARK(BM_ConditionalEntropy16);

void BM_CoherentInfoMax(benchmark::State& state) {
  const auto ch = erasure_channel(0.25, 2);
  for (auto _ : state) benchmark::DoNotOptimize(channel_coherent_info_max(ch, 10, 0, 4000));
}
BENCHMARK(BM_CoherentInfoMax)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const auto spec = SweepSpec::defaults(BoundKind::Nonconvexity);
  for (auto _ : state) benchmark::DoNotOptimize(to_csv(run_sweep(spec)));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

void BM_TiedSweep(benchmark::State& state) {
  auto spec = SweepSpec::defaults(BoundKind::Depolarizing);
  spec.ranges.pop_back();
  spec.epsilon_mode = EpsilonMode::Tied;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_TiedSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
