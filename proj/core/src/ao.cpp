#include "rasec/ao.hpp"

#include <cmath>
#include <numbers>

namespace rasec {

namespace {

PointingMatrix boresight_pointing(int antennas) {
  PointingMatrix F(3, antennas);
  F.setZero();
  F.row(2).setOnes();
  return F;
}

TraceEntry make_entry(const Eigen::VectorXcd& v, const ChannelSet& channels,
                      const PointingMatrix& F, const NoiseBudget& noise) {
  const RateReport report = secrecy_report(v, channels, F, noise);
  TraceEntry entry;
  entry.secrecy_rate = report.secrecy_rate;
  entry.user_rate = report.user_rate;
  entry.eve_rate = report.eve_rate;
  entry.beam_power = v.squaredNorm();
  return entry;
}

bool stop_reached(double current, double previous, double rel_tolerance) {
  // clamped secrecy rate can be exactly zero; fall back to absolute change
  if (previous < 1e-12) {
    return std::abs(current - previous) <= rel_tolerance;
  }
  return std::abs(current - previous) / previous <= rel_tolerance;
}

}  // namespace

const char* scheme_name(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::RaOptimized: return "ra";
    case SchemeKind::Fixed: return "fixed";
    case SchemeKind::Isotropic: return "isotropic";
    case SchemeKind::RandomDeflection: return "random";
  }
  return "unknown";
}

AOResult run_ao(const Scenario& scenario, const ChannelSet& channels, const AOConfig& config) {
  const NoiseBudget noise = scenario.noise;
  const double power = scenario.transmit_power;

  AOResult result;
  PointingMatrix F = boresight_pointing(channels.antenna_count());

  Beamformer beam = optimal_beamformer(build_forms(channels, F, noise), power);
  result.trace.push_back(make_entry(beam.weights, channels, F, noise));
  double previous_rate = result.trace.back().secrecy_rate;

  for (int outer = 1; outer <= config.max_outer; ++outer) {
    if (outer > 1) {
      beam = optimal_beamformer(build_forms(channels, F, noise), power);
    }
    auto [next_F, sca_trace] = optimize_pointing(beam.weights, F, channels, noise,
                                                 scenario.max_zenith, config.sca);
    F = next_F;

    TraceEntry entry = make_entry(beam.weights, channels, F, noise);
    entry.sca_iterations = sca_trace.iterations;
    entry.damped_steps = sca_trace.damped_steps;
    entry.safeguard_stop = sca_trace.safeguard_stop;
    result.trace.push_back(entry);
    result.outer_iterations = outer;

    if (stop_reached(entry.secrecy_rate, previous_rate, config.rel_tolerance)) {
      result.converged = true;
      break;
    }
    previous_rate = entry.secrecy_rate;
  }

  FinalizedPointing finalized = finalize(F);
  result.beamformer = std::move(beam);
  result.pointing = std::move(finalized.pointing);
  result.angles = std::move(finalized.angles);
  return result;
}

BenchmarkResult run_benchmark(SchemeKind scheme, const Scenario& scenario,
                              const ChannelSet& channels, RngStream& rng) {
  const int K = channels.antenna_count();
  BenchmarkResult result;

  switch (scheme) {
    case SchemeKind::Fixed:
      result.pointing = boresight_pointing(K);
      break;
    case SchemeKind::RandomDeflection: {
      result.pointing.resize(3, K);
      for (int k = 0; k < K; ++k) {
        DeflectionAngles angles;
        angles.zenith = rng.uniform(0.0, scenario.max_zenith);
        angles.azimuth = rng.uniform(0.0, 2.0 * std::numbers::pi);
        result.pointing.col(k) = pointing_vector(angles);
      }
      break;
    }
    case SchemeKind::Isotropic:
      result.pointing = boresight_pointing(K);  // placeholder; gain is pattern-free
      break;
    case SchemeKind::RaOptimized:
      throw std::invalid_argument("run_benchmark: use run_ao for the optimized scheme");
  }

  const ChannelSet* active = &channels;
  ChannelSet isotropic;
  if (scheme == SchemeKind::Isotropic) {
    isotropic = channels.with_pattern(GainPattern::isotropic());
    active = &isotropic;
  }

  result.beamformer =
      optimal_beamformer(build_forms(*active, result.pointing, scenario.noise),
                         scenario.transmit_power);
  result.report =
      secrecy_report(result.beamformer.weights, *active, result.pointing, scenario.noise);
  return result;
}

}  // namespace rasec
