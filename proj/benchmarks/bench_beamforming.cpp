#include <benchmark/benchmark.h>

#include "rasec/beamforming.hpp"
#include "rasec/experiments.hpp"

namespace {

using namespace rasec;

void BM_OptimalBeamformer(benchmark::State& state) {
  const Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 1, 0);
  PointingMatrix F(3, s.antenna_count());
  F.setZero();
  F.row(2).setOnes();
  const QuadraticForms forms = build_forms(cs, F, s.noise);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_beamformer(forms, s.transmit_power));
  }
}
BENCHMARK(BM_OptimalBeamformer)->Unit(benchmark::kMicrosecond);

void BM_BuildForms(benchmark::State& state) {
  const Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 1, 0);
  PointingMatrix F(3, s.antenna_count());
  F.setZero();
  F.row(2).setOnes();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_forms(cs, F, s.noise));
  }
}
BENCHMARK(BM_BuildForms)->Unit(benchmark::kMicrosecond);

}  // namespace
