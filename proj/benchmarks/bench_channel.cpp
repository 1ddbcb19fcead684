#include <benchmark/benchmark.h>

#include "rasec/experiments.hpp"
#include "rasec/sca.hpp"

namespace {

using namespace rasec;

void BM_RealizeChannels(benchmark::State& state) {
  const Scenario s = default_scenario();
  std::uint64_t r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_channels(s, 1, r++));
  }
}
BENCHMARK(BM_RealizeChannels)->Unit(benchmark::kMicrosecond);

void BM_SecrecyObjective(benchmark::State& state) {
  const Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 1, 0);
  PointingMatrix F(3, s.antenna_count());
  F.setZero();
  F.row(2).setOnes();
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(
      s.antenna_count(), std::sqrt(s.transmit_power / s.antenna_count()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(secrecy_objective(v, cs, F, s.noise));
  }
}
BENCHMARK(BM_SecrecyObjective)->Unit(benchmark::kMicrosecond);

void BM_Linearize(benchmark::State& state) {
  const Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 1, 0);
  PointingMatrix F(3, s.antenna_count());
  F.setZero();
  F.row(2).setOnes();
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(
      s.antenna_count(), std::sqrt(s.transmit_power / s.antenna_count()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linearize(v, F, cs, s.noise));
  }
}
BENCHMARK(BM_Linearize)->Unit(benchmark::kMicrosecond);

}  // namespace
