#include <benchmark/benchmark.h>

#include "rasec/ao.hpp"
#include "rasec/experiments.hpp"

namespace {

using namespace rasec;

void BM_RunAoDefault(benchmark::State& state) {
  const Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ao(s, cs, AOConfig{}));
  }
}
BENCHMARK(BM_RunAoDefault)->Unit(benchmark::kMillisecond);

void BM_OptimizePointing(benchmark::State& state) {
  const Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 1, 0);
  PointingMatrix F(3, s.antenna_count());
  F.setZero();
  F.row(2).setOnes();
  const Beamformer beam =
      optimal_beamformer(build_forms(cs, F, s.noise), s.transmit_power);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        optimize_pointing(beam.weights, F, cs, s.noise, s.max_zenith, ScaConfig{}));
  }
}
BENCHMARK(BM_OptimizePointing)->Unit(benchmark::kMillisecond);

}  // namespace
