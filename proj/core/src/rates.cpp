#include "rasec/rates.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "rasec/channel.hpp"
#include "rasec/scenario.hpp"

namespace rasec {

namespace {

inline double beam_power(const Eigen::VectorXcd& v, const Eigen::VectorXcd& h) {
  return std::norm(v.dot(h));  // Eigen's dot conjugates the left operand
}

// |v^H h_m(F)|^2 without materializing h_m
inline double beam_power_at(const Eigen::VectorXcd& v, const ChannelSet& cs, int node,
                            const PointingMatrix& F) {
  std::complex<double> s{0.0, 0.0};
  const int K = cs.antenna_count();
  for (int k = 0; k < K; ++k) {
    s += std::conj(v[k]) * cs.coefficient(node, k, F.col(k));
  }
  return std::norm(s);
}

}  // namespace

double legitimate_rate(const Eigen::VectorXcd& v, const Eigen::VectorXcd& h_user,
                       double noise_w) {
  return std::log2(1.0 + beam_power(v, h_user) / noise_w);
}

double eavesdropper_rate(const Eigen::VectorXcd& v,
                         const std::vector<Eigen::VectorXcd>& h_eves, double noise_w) {
  double leak = 0.0;
  for (const auto& h : h_eves) leak += beam_power(v, h);
  return std::log2(1.0 + leak / noise_w);
}

RateReport secrecy_rate(double user_rate, double eve_rate) {
  return {user_rate, eve_rate, std::max(user_rate - eve_rate, 0.0)};
}

QuadraticForms build_forms(const ChannelSet& channels, const PointingMatrix& F,
                           const NoiseBudget& noise) {
  const int K = channels.antenna_count();
  QuadraticForms forms;
  const Eigen::VectorXcd h0 = channels.channel(0, F);
  forms.signal = (h0 * h0.adjoint()) / noise.user;
  forms.leakage = Eigen::MatrixXcd::Zero(K, K);
  for (int m = 1; m < channels.node_count(); ++m) {
    const Eigen::VectorXcd hm = channels.channel(m, F);
    forms.leakage += (hm * hm.adjoint()) / noise.eve;
  }
  return forms;
}

double secrecy_objective(const Eigen::VectorXcd& v, const ChannelSet& channels,
                         const PointingMatrix& F, const NoiseBudget& noise) {
  double leak = 0.0;
  for (int m = 1; m < channels.node_count(); ++m) {
    leak += beam_power_at(v, channels, m, F);
  }
  return std::log2(1.0 + beam_power_at(v, channels, 0, F) / noise.user) -
         std::log2(1.0 + leak / noise.eve);
}

RateReport secrecy_report(const Eigen::VectorXcd& v, const ChannelSet& channels,
                          const PointingMatrix& F, const NoiseBudget& noise) {
  double leak = 0.0;
  for (int m = 1; m < channels.node_count(); ++m) {
    leak += beam_power_at(v, channels, m, F);
  }
  const double ru = std::log2(1.0 + beam_power_at(v, channels, 0, F) / noise.user);
  const double re = std::log2(1.0 + leak / noise.eve);
  return secrecy_rate(ru, re);
}

double array_gain_probe(const Eigen::VectorXcd& v, const PointingMatrix& F,
                        const Scenario& scenario, double phi) {
  const Vec3 probe = node_position(scenario.user_range, phi);
  const auto antennas = scenario.antenna_positions();
  std::complex<double> response{0.0, 0.0};
  for (std::size_t k = 0; k < antennas.size(); ++k) {
    auto [dir, dist] = direction_and_distance(probe, antennas[k]);
    const double gain =
        directional_gain(scenario.pattern, F.col(static_cast<int>(k)).dot(dir));
    const double phase = -2.0 * std::numbers::pi * dist / scenario.wavelength;
    response += std::conj(v[static_cast<int>(k)]) * std::sqrt(gain) *
                std::complex<double>{std::cos(phase), std::sin(phase)};
  }
  // relative to a single isotropic antenna driven at full power
  const double ratio = std::norm(response) / scenario.transmit_power;
  return 10.0 * std::log10(std::max(ratio, 1e-30));
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace rasec
