#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "rasec/channel.hpp"
#include "rasec/experiments.hpp"
#include "rasec/rates.hpp"

using namespace rasec;

namespace {
constexpr double kPi = std::numbers::pi;

PointingMatrix boresight(int k) {
  PointingMatrix F(3, k);
  F.setZero();
  F.row(2).setOnes();
  return F;
}
}  // namespace

TEST_CASE("legitimate rate") {
  RngStream rng(51);
  const Eigen::VectorXcd h = testing::random_complex_vector(rng, 6);

  CHECK(legitimate_rate(Eigen::VectorXcd::Zero(6), h, 1e-9) == 0.0);

  // scalar reduction
  const double power = 0.25;
  Eigen::VectorXcd v1(1), h1(1);
  v1[0] = std::sqrt(power);
  h1[0] = std::complex<double>{3e-4, 1e-4};
  CHECK(legitimate_rate(v1, h1, 1e-9) ==
        doctest::Approx(std::log2(1.0 + power * std::norm(h1[0]) / 1e-9)).epsilon(1e-14));

  // inner-product identity |v^H h|^2 = (v^H h)(h^H v)
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXcd v = testing::random_complex_vector(rng, 6);
    const Eigen::VectorXcd hh = testing::random_complex_vector(rng, 6);
    std::complex<double> vh{0.0, 0.0};
    std::complex<double> hv{0.0, 0.0};
    for (int k = 0; k < 6; ++k) {
      vh += std::conj(v[k]) * hh[k];
      hv += std::conj(hh[k]) * v[k];
    }
    const double expected = std::log2(1.0 + std::real(vh * hv) / 1e-9);
    CHECK(legitimate_rate(v, hh, 1e-9) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("eavesdropper rate") {
  RngStream rng(52);
  const Eigen::VectorXcd v = testing::random_complex_vector(rng, 4);
  CHECK(eavesdropper_rate(v, {}, 1e-9) == 0.0);

  const Eigen::VectorXcd h1 = testing::random_complex_vector(rng, 4);
  const Eigen::VectorXcd h2 = testing::random_complex_vector(rng, 4);
  CHECK(eavesdropper_rate(v, {h1}, 1e-9) ==
        doctest::Approx(legitimate_rate(v, h1, 1e-9)).epsilon(1e-14));
  CHECK(eavesdropper_rate(v, {h1, h2}, 1e-9) >=
        std::max(eavesdropper_rate(v, {h1}, 1e-9), eavesdropper_rate(v, {h2}, 1e-9)));
}

TEST_CASE("secrecy rate clamp") {
  CHECK(secrecy_rate(5.0, 2.0).secrecy_rate == 3.0);
  CHECK(secrecy_rate(2.0, 5.0).secrecy_rate == 0.0);
  CHECK(secrecy_rate(4.5, 0.0).secrecy_rate == 4.5);  // M = 0
}

TEST_CASE("quadratic forms") {
  Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 61, 0);
  const PointingMatrix F = boresight(s.antenna_count());
  const QuadraticForms forms = build_forms(cs, F, s.noise);
  const Eigen::VectorXcd h0 = cs.channel(0, F);

  CHECK(std::abs(std::real(forms.signal.trace()) - h0.squaredNorm() / s.noise.user) <=
        1e-12 * h0.squaredNorm() / s.noise.user);

  // Hermitian within 1e-12 (relative to the largest entry)
  const double scale_a = forms.signal.cwiseAbs().maxCoeff();
  const double scale_b = forms.leakage.cwiseAbs().maxCoeff();
  CHECK((forms.signal - forms.signal.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale_a);
  CHECK((forms.leakage - forms.leakage.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale_b);

  // PSD and rank structure
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_a(forms.signal);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_b(forms.leakage);
  CHECK(es_a.eigenvalues().minCoeff() >= -1e-10 * es_a.eigenvalues().maxCoeff());
  CHECK(es_b.eigenvalues().minCoeff() >= -1e-10 * es_b.eigenvalues().maxCoeff());
  int nonzero_a = 0;
  for (int i = 0; i < es_a.eigenvalues().size(); ++i) {
    if (es_a.eigenvalues()[i] > 1e-9 * es_a.eigenvalues().maxCoeff()) ++nonzero_a;
  }
  CHECK(nonzero_a == 1);

  // v^H A v == |v^H h0|^2 / noise
  RngStream rng(62);
  for (int i = 0; i < 50; ++i) {
    const Eigen::VectorXcd v = testing::random_complex_vector(rng, s.antenna_count());
    const double quad = std::real(v.dot(forms.signal * v));
    const double direct = std::norm(v.dot(h0)) / s.noise.user;
    CHECK(quad == doctest::Approx(direct).epsilon(1e-10));
  }

  // M = 0 leaves no leakage
  Scenario lone = s;
  lone.eve_angles.clear();
  const ChannelSet cs0 = realize_channels(lone, 61, 0);
  const QuadraticForms forms0 = build_forms(cs0, F, lone.noise);
  CHECK(forms0.leakage.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("secrecy objective matches report") {
  Scenario s = default_scenario();
  const ChannelSet cs = realize_channels(s, 63, 1);
  const PointingMatrix F = boresight(s.antenna_count());
  RngStream rng(64);
  const Eigen::VectorXcd v =
      testing::random_feasible_beamformer(rng, s.antenna_count(), s.transmit_power, true);

  const RateReport report = secrecy_report(v, cs, F, s.noise);
  std::vector<Eigen::VectorXcd> eves;
  for (int m = 1; m < cs.node_count(); ++m) eves.push_back(cs.channel(m, F));
  CHECK(report.user_rate ==
        doctest::Approx(legitimate_rate(v, cs.channel(0, F), s.noise.user)).epsilon(1e-14));
  CHECK(report.eve_rate ==
        doctest::Approx(eavesdropper_rate(v, eves, s.noise.eve)).epsilon(1e-14));
  CHECK(secrecy_objective(v, cs, F, s.noise) ==
        doctest::Approx(report.user_rate - report.eve_rate).epsilon(1e-12));
}

TEST_CASE("secrecy rate is monotone in the beam powers") {
  RngStream rng(65);
  const Eigen::VectorXcd v = testing::random_complex_vector(rng, 5);
  const Eigen::VectorXcd h0 = testing::random_complex_vector(rng, 5);
  const Eigen::VectorXcd h1 = testing::random_complex_vector(rng, 5);
  const Eigen::VectorXcd h2 = testing::random_complex_vector(rng, 5);

  double previous = -1e300;
  for (double scale : {0.5, 1.0, 2.0, 4.0}) {
    const double r = secrecy_rate(legitimate_rate(v, scale * h0, 1.0),
                                  eavesdropper_rate(v, {h1, h2}, 1.0))
                         .secrecy_rate;
    CHECK(r >= previous);
    previous = r;
  }
  previous = 1e300;
  for (double scale : {0.5, 1.0, 2.0, 4.0}) {
    const double r = secrecy_rate(legitimate_rate(v, h0, 1.0),
                                  eavesdropper_rate(v, {scale * h1, h2}, 1.0))
                         .secrecy_rate;
    CHECK(r <= previous);
    previous = r;
  }
}

TEST_CASE("unit conversions") {
  CHECK(dbm_to_watt(-60.0) == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dbm_to_watt(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(watt_to_dbm(1e-9) == doctest::Approx(-60.0).epsilon(1e-12));
  CHECK(db_to_linear(-30.0) == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("array gain probe") {
  ExperimentConfig cfg;
  cfg.grid_x = 1;
  cfg.grid_y = 1;
  Scenario s = cfg.scenario();

  Eigen::VectorXcd v(1);
  v[0] = std::sqrt(s.transmit_power);
  PointingMatrix F(3, 1);
  F.col(0) = Vec3{0.0, 0.0, 1.0};

  // single boresight antenna peaks overhead
  double best_phi = 0.0;
  double best = -1e9;
  for (int j = 0; j <= 180; ++j) {
    const double phi = j * kPi / 180.0;
    const double g = array_gain_probe(v, F, s, phi);
    if (g > best) {
      best = g;
      best_phi = phi;
    }
  }
  CHECK(best_phi == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(best == doctest::Approx(10.0 * std::log10(18.0)).epsilon(1e-9));

  // deterministic recomputation
  for (int j = 0; j <= 180; ++j) {
    const double phi = j * kPi / 180.0;
    CHECK(array_gain_probe(v, F, s, phi) == array_gain_probe(v, F, s, phi));
  }
}
