// Alternating optimization of the transmit beamformer and the pointing
// matrix, plus the three benchmark antenna configurations.
#pragma once

#include <vector>

#include "rasec/beamforming.hpp"
#include "rasec/channel.hpp"
#include "rasec/geometry.hpp"
#include "rasec/rates.hpp"
#include "rasec/rng.hpp"
#include "rasec/sca.hpp"
#include "rasec/scenario.hpp"

namespace rasec {

enum class SchemeKind {
  RaOptimized,      // alternating optimization of beamformer and deflections
  Fixed,            // all boresights at e3
  Isotropic,        // unit-gain pattern, deflections irrelevant
  RandomDeflection  // uniform random deflections within the zenith limit
};

const char* scheme_name(SchemeKind scheme);

struct AOConfig {
  double rel_tolerance = 1e-8;  // relative secrecy-rate change threshold
  int max_outer = 50;
  ScaConfig sca;
};

struct TraceEntry {
  double secrecy_rate = 0.0;  // bps/Hz, clamped
  double user_rate = 0.0;
  double eve_rate = 0.0;
  double beam_power = 0.0;    // |v|^2
  int sca_iterations = 0;
  int damped_steps = 0;
  bool safeguard_stop = false;
};

struct AOResult {
  Beamformer beamformer;
  PointingMatrix pointing;  // finalized, unit columns
  std::vector<DeflectionAngles> angles;
  // entry 0 is the all-e3 starting point with its optimal beamformer (the
  // fixed-antenna configuration); entry i is the state after outer round i
  std::vector<TraceEntry> trace;
  bool converged = false;
  int outer_iterations = 0;

  double final_secrecy_rate() const { return trace.back().secrecy_rate; }
};

// Algorithm: start from all-e3 pointing, alternate the closed-form beamformer
// with the safeguarded deflection ascent, and stop when the relative secrecy
// rate change drops below the threshold (absolute change when the rate is
// numerically zero) or the outer cap is reached.
AOResult run_ao(const Scenario& scenario, const ChannelSet& channels, const AOConfig& config);

struct BenchmarkResult {
  Beamformer beamformer;
  PointingMatrix pointing;
  RateReport report;
};

// One-shot schemes: configure the pointing matrix (and gain pattern), then
// apply the optimal beamformer once. `rng` is consumed only by the
// random-deflection scheme.
BenchmarkResult run_benchmark(SchemeKind scheme, const Scenario& scenario,
                              const ChannelSet& channels, RngStream& rng);

}  // namespace rasec
