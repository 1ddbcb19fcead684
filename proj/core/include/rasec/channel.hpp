// Directional-gain, path-loss, and Rician fading synthesis into per-node
// channel vectors. Fading draws are keyed by (seed, realization, node,
// antenna) only, so re-evaluating with a new pointing matrix reuses the same
// fading realization.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rasec/geometry.hpp"
#include "rasec/rng.hpp"

namespace rasec {

struct Scenario;

struct GainPattern {
  enum class Kind { Directional, Isotropic };

  Kind kind = Kind::Directional;
  double directivity = 4.0;  // p
  double peak_gain = 18.0;   // G0 = 2(2p+1) for the directional model

  // cos^(2p) pattern over the front hemisphere, peak 2(2p+1) at boresight
  static GainPattern directional(double directivity);
  // unit gain over the full sphere (benchmark pattern)
  static GainPattern isotropic();
};

// Effective gain at incidence cosine cos_eps relative to boresight. Zero on
// the back hemisphere for the directional pattern, constant 1 for isotropic.
double directional_gain(const GainPattern& pattern, double cos_incidence);

struct PathLossModel {
  double ref_gain = 1e-3;     // linear power gain at the reference distance
  double exponent = 3.0;      // path-loss exponent
  double ref_distance = 1.0;  // meters
};

// Deterministic large-scale power gain ref_gain * (d0/d)^alpha.
// Throws std::domain_error for d <= 0.
double path_loss(const PathLossModel& model, double distance);

struct RicianParams {
  double k_factor = 1.0;     // LoS-to-NLoS power ratio
  double wavelength = 0.125;  // meters
  bool pure_los = false;     // K -> infinity limit
};

// One small-scale coefficient: sqrt(K/(K+1)) e^{-j2πd/λ} + sqrt(1/(K+1)) g~
// with g~ ~ CN(0,1). E|g|^2 = 1. The pure-LoS flag returns the phasor exactly.
std::complex<double> draw_small_scale(RngStream& stream, const RicianParams& params,
                                      double distance);

// Directional-channel coefficient amplitude * max(f.q, 0)^p. `amplitude` is
// the pointing-independent part sqrt(L(d) G0) * g.
std::complex<double> channel_coefficient(const Vec3& pointing, std::complex<double> amplitude,
                                         const Vec3& direction, double directivity);

// One fading realization: cached link geometry, fading draws, and composite
// amplitudes for the user (node 0) and M eavesdroppers (nodes 1..M).
class ChannelSet {
 public:
  ChannelSet() = default;

  int node_count() const { return static_cast<int>(distance_.size() / antennas_); }
  int eavesdropper_count() const { return node_count() - 1; }
  int antenna_count() const { return antennas_; }
  const GainPattern& pattern() const { return pattern_; }

  double distance(int node, int antenna) const { return distance_[index(node, antenna)]; }
  const Vec3& direction(int node, int antenna) const { return direction_[index(node, antenna)]; }
  std::complex<double> fading(int node, int antenna) const { return fading_[index(node, antenna)]; }
  double path_gain(int node, int antenna) const { return path_gain_[index(node, antenna)]; }
  // beta~ = sqrt(L(d) G0) * g
  std::complex<double> link_amplitude(int node, int antenna) const {
    return amplitude_[index(node, antenna)];
  }

  // h_{m,k}(f_k); ignores the pointing vector for the isotropic pattern
  std::complex<double> coefficient(int node, int antenna, const Vec3& pointing) const;

  Eigen::VectorXcd channel(int node, const PointingMatrix& F) const;
  std::vector<Eigen::VectorXcd> channels(const PointingMatrix& F) const;

  // Same geometry and fading draws under a different gain pattern; used for
  // the isotropic benchmark so scheme comparisons stay paired.
  ChannelSet with_pattern(const GainPattern& pattern) const;

  friend ChannelSet realize_channels(const Scenario& scenario, std::uint64_t master_seed,
                                     std::uint64_t realization);

 private:
  std::size_t index(int node, int antenna) const {
    return static_cast<std::size_t>(node) * antennas_ + antenna;
  }

  GainPattern pattern_;
  int antennas_ = 0;
  // row-major [node][antenna]
  std::vector<double> distance_;
  std::vector<Vec3> direction_;
  std::vector<double> path_gain_;
  std::vector<std::complex<double>> fading_;
  std::vector<std::complex<double>> amplitude_;
};

// Draws the fading realization indexed by (master_seed, realization) for the
// scenario geometry. The draw for link (node, antenna) depends only on
// (master_seed, realization, node, antenna).
ChannelSet realize_channels(const Scenario& scenario, std::uint64_t master_seed,
                            std::uint64_t realization);

}  // namespace rasec
