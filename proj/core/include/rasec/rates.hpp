// Secrecy-rate arithmetic, the quadratic forms behind the beamformer, and the
// deterministic array-gain probe.
#pragma once

#include <Eigen/Core>

#include <vector>

#include "rasec/geometry.hpp"

namespace rasec {

class ChannelSet;
struct Scenario;

struct NoiseBudget {
  double user = 1e-9;  // W, legitimate receiver
  double eve = 1e-9;   // W, each eavesdropper
};

struct RateReport {
  double user_rate = 0.0;     // bps/Hz
  double eve_rate = 0.0;      // bps/Hz
  double secrecy_rate = 0.0;  // max(user - eve, 0)
};

double legitimate_rate(const Eigen::VectorXcd& v, const Eigen::VectorXcd& h_user,
                       double noise_w);

// Colluding eavesdroppers: log2(1 + sum_m |v^H h_m|^2 / noise). Zero for M=0.
double eavesdropper_rate(const Eigen::VectorXcd& v,
                         const std::vector<Eigen::VectorXcd>& h_eves, double noise_w);

RateReport secrecy_rate(double user_rate, double eve_rate);

struct QuadraticForms {
  Eigen::MatrixXcd signal;   // h0 h0^H / user noise, rank <= 1
  Eigen::MatrixXcd leakage;  // sum_m h_m h_m^H / eve noise, rank <= M
};

QuadraticForms build_forms(const ChannelSet& channels, const PointingMatrix& F,
                           const NoiseBudget& noise);

// R_u - R_e without the positive-part clamp; the quantity the optimizer drives.
double secrecy_objective(const Eigen::VectorXcd& v, const ChannelSet& channels,
                         const PointingMatrix& F, const NoiseBudget& noise);

RateReport secrecy_report(const Eigen::VectorXcd& v, const ChannelSet& channels,
                          const PointingMatrix& F, const NoiseBudget& noise);

// Deterministic pure-LoS steering response towards a probe point at the user
// radius in the x-z plane, in dB relative to a single isotropic antenna
// driven at full power.
double array_gain_probe(const Eigen::VectorXcd& v, const PointingMatrix& F,
                        const Scenario& scenario, double phi);

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double db_to_linear(double db);

}  // namespace rasec
