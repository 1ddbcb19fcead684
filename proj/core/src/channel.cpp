#include "rasec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rasec/scenario.hpp"

namespace rasec {

namespace {

// x^p for x >= 0 with fast paths for the common integer directivities
inline double pow_pos(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  if (p == 4.0) {
    const double x2 = x * x;
    return x2 * x2;
  }
  return std::pow(x, p);
}

}  // namespace

GainPattern GainPattern::directional(double directivity) {
  GainPattern g;
  g.kind = Kind::Directional;
  g.directivity = directivity;
  g.peak_gain = 2.0 * (2.0 * directivity + 1.0);
  return g;
}

GainPattern GainPattern::isotropic() {
  GainPattern g;
  g.kind = Kind::Isotropic;
  g.directivity = 0.0;
  g.peak_gain = 1.0;
  return g;
}

double directional_gain(const GainPattern& pattern, double cos_incidence) {
  if (pattern.kind == GainPattern::Kind::Isotropic) return 1.0;
  if (cos_incidence <= 0.0) return 0.0;
  return pattern.peak_gain * pow_pos(cos_incidence, 2.0 * pattern.directivity);
}

double path_loss(const PathLossModel& model, double distance) {
  if (distance <= 0.0) {
    throw std::domain_error("path_loss: distance must be positive");
  }
  return model.ref_gain * std::pow(model.ref_distance / distance, model.exponent);
}

std::complex<double> draw_small_scale(RngStream& stream, const RicianParams& params,
                                      double distance) {
  const double phase = -2.0 * std::numbers::pi * distance / params.wavelength;
  const std::complex<double> los{std::cos(phase), std::sin(phase)};
  if (params.pure_los) return los;
  const double k = params.k_factor;
  const std::complex<double> nlos = stream.complex_normal();
  return std::sqrt(k / (k + 1.0)) * los + std::sqrt(1.0 / (k + 1.0)) * nlos;
}

std::complex<double> channel_coefficient(const Vec3& pointing, std::complex<double> amplitude,
                                         const Vec3& direction, double directivity) {
  const double proj = pointing.dot(direction);
  if (proj <= 0.0) return {0.0, 0.0};
  return amplitude * pow_pos(proj, directivity);
}

std::complex<double> ChannelSet::coefficient(int node, int antenna, const Vec3& pointing) const {
  const std::size_t i = index(node, antenna);
  if (pattern_.kind == GainPattern::Kind::Isotropic) {
    return amplitude_[i];  // gain 1 over the full sphere, pointing irrelevant
  }
  return channel_coefficient(pointing, amplitude_[i], direction_[i], pattern_.directivity);
}

Eigen::VectorXcd ChannelSet::channel(int node, const PointingMatrix& F) const {
  Eigen::VectorXcd h(antennas_);
  for (int k = 0; k < antennas_; ++k) {
    h[k] = coefficient(node, k, F.col(k));
  }
  return h;
}

std::vector<Eigen::VectorXcd> ChannelSet::channels(const PointingMatrix& F) const {
  std::vector<Eigen::VectorXcd> out;
  out.reserve(node_count());
  for (int m = 0; m < node_count(); ++m) {
    out.push_back(channel(m, F));
  }
  return out;
}

ChannelSet ChannelSet::with_pattern(const GainPattern& pattern) const {
  ChannelSet out = *this;
  out.pattern_ = pattern;
  for (std::size_t i = 0; i < out.amplitude_.size(); ++i) {
    out.amplitude_[i] = std::sqrt(out.path_gain_[i] * pattern.peak_gain) * out.fading_[i];
  }
  return out;
}

ChannelSet realize_channels(const Scenario& scenario, std::uint64_t master_seed,
                            std::uint64_t realization) {
  const auto antennas = scenario.antenna_positions();
  const int K = static_cast<int>(antennas.size());
  const int nodes = scenario.node_count();
  const RicianParams rician = scenario.rician();

  ChannelSet cs;
  cs.pattern_ = scenario.pattern;
  cs.antennas_ = K;
  const std::size_t total = static_cast<std::size_t>(nodes) * K;
  cs.distance_.resize(total);
  cs.direction_.resize(total);
  cs.path_gain_.resize(total);
  cs.fading_.resize(total);
  cs.amplitude_.resize(total);

  for (int m = 0; m < nodes; ++m) {
    const Vec3 pos = scenario.node_pos(m);
    for (int k = 0; k < K; ++k) {
      const std::size_t i = static_cast<std::size_t>(m) * K + k;
      auto [dir, dist] = direction_and_distance(pos, antennas[k]);
      cs.distance_[i] = dist;
      cs.direction_[i] = dir;
      cs.path_gain_[i] = path_loss(scenario.path_loss, dist);
      RngStream stream(derive_seed(master_seed, stream_tag::fading, realization,
                                   static_cast<std::uint64_t>(m),
                                   static_cast<std::uint64_t>(k)));
      cs.fading_[i] = draw_small_scale(stream, rician, dist);
      cs.amplitude_[i] =
          std::sqrt(cs.path_gain_[i] * scenario.pattern.peak_gain) * cs.fading_[i];
    }
  }
  return cs;
}

}  // namespace rasec
