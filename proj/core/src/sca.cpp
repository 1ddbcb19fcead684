#include "rasec/sca.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rasec {

namespace {

constexpr double kLn2 = std::numbers::ln2;

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

CVec3 channel_gradient(const Vec3& pointing, std::complex<double> amplitude,
                       const Vec3& direction, double directivity) {
  const double proj = pointing.dot(direction);
  if (proj <= 0.0) return CVec3::Zero();
  const std::complex<double> scale =
      amplitude * directivity * pow_pos(proj, directivity - 1.0);
  return scale * direction.cast<std::complex<double>>();
}

double LinearizationTerms::model_value(const PointingMatrix& F,
                                       const PointingMatrix& anchor) const {
  double value = user_rate_at_anchor - eve_rate_at_anchor;
  for (int k = 0; k < slopes.cols(); ++k) {
    value += slopes.col(k).dot(F.col(k) - anchor.col(k));
  }
  return value;
}

LinearizationTerms linearize(const Eigen::VectorXcd& v, const PointingMatrix& anchor,
                             const ChannelSet& channels, const NoiseBudget& noise) {
  const int K = channels.antenna_count();
  const int nodes = channels.node_count();
  const double p = channels.pattern().directivity;

  // beam outputs s_m = v^H h_m at the anchor
  std::vector<std::complex<double>> beam(nodes, {0.0, 0.0});
  for (int m = 0; m < nodes; ++m) {
    for (int k = 0; k < K; ++k) {
      beam[m] += std::conj(v[k]) * channels.coefficient(m, k, anchor.col(k));
    }
  }
  double leak = 0.0;
  for (int m = 1; m < nodes; ++m) leak += std::norm(beam[m]);
  const double user_den = 1.0 + std::norm(beam[0]) / noise.user;
  const double eve_den = 1.0 + leak / noise.eve;

  LinearizationTerms terms;
  terms.user_rate_at_anchor = std::log2(user_den);
  terms.eve_rate_at_anchor = std::log2(eve_den);
  terms.slopes = Eigen::Matrix3Xd::Zero(3, K);

  // d/df_k log2(1 + |s_m|^2/sigma^2) = (2 / (ln2 sigma^2 den)) Re{s_m^* v_k^* h'_{m,k}}
  for (int k = 0; k < K; ++k) {
    Vec3 slope = Vec3::Zero();
    for (int m = 0; m < nodes; ++m) {
      const CVec3 grad = channel_gradient(anchor.col(k), channels.link_amplitude(m, k),
                                          channels.direction(m, k), p);
      const std::complex<double> front = std::conj(beam[m]) * std::conj(v[k]);
      const Vec3 real_part = (front * grad.array()).real().matrix();
      if (m == 0) {
        slope += (2.0 / (kLn2 * noise.user * user_den)) * real_part;
      } else {
        slope -= (2.0 / (kLn2 * noise.eve * eve_den)) * real_part;
      }
    }
    terms.slopes.col(k) = slope;
  }
  return terms;
}

Vec3 solve_antenna_subproblem(const Vec3& slope, double max_zenith, const Vec3& current) {
  const double norm = slope.norm();
  if (norm == 0.0) return current;  // flat model: do not move

  const double cos_max = std::cos(max_zenith);
  const Vec3 unit = slope / norm;
  if (unit.z() >= cos_max) return unit;

  // cone face is active; pick the azimuth from the slope, falling back to the
  // current azimuth (then boresight) when the slope has no lateral component
  const double sin_max = std::sin(max_zenith);
  Eigen::Vector2d lateral(slope.x(), slope.y());
  double lateral_norm = lateral.norm();
  if (lateral_norm == 0.0) {
    lateral = Eigen::Vector2d(current.x(), current.y());
    lateral_norm = lateral.norm();
    if (lateral_norm == 0.0) return Vec3::UnitZ();
  }
  lateral /= lateral_norm;
  return {sin_max * lateral.x(), sin_max * lateral.y(), cos_max};
}

PointingMatrix solve_subproblem(const Eigen::Matrix3Xd& slopes, double max_zenith,
                                const PointingMatrix& current) {
  PointingMatrix out(3, current.cols());
  for (int k = 0; k < current.cols(); ++k) {
    out.col(k) = solve_antenna_subproblem(slopes.col(k), max_zenith, current.col(k));
  }
  return out;
}

std::pair<PointingMatrix, ScaTrace> optimize_pointing(const Eigen::VectorXcd& v,
                                                      const PointingMatrix& start,
                                                      const ChannelSet& channels,
                                                      const NoiseBudget& noise,
                                                      double max_zenith,
                                                      const ScaConfig& config) {
  PointingMatrix F = start;
  double objective = secrecy_objective(v, channels, F, noise);
  ScaTrace trace;

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const LinearizationTerms terms = linearize(v, F, channels, noise);
    const PointingMatrix candidate = solve_subproblem(terms.slopes, max_zenith, F);

    // accept the first (possibly damped) step that does not decrease the
    // true objective; the feasible set is convex, so damped points stay
    // feasible
    bool accepted = false;
    double scale = 1.0;
    double step_norm = 0.0;
    for (int halving = 0; halving <= config.max_halvings; ++halving) {
      const PointingMatrix trial = F + scale * (candidate - F);
      const double trial_objective = secrecy_objective(v, channels, trial, noise);
      if (trial_objective >= objective) {
        if (halving > 0) ++trace.damped_steps;
        step_norm = (trial - F).norm();
        F = trial;
        objective = trial_objective;
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    ++trace.iterations;
    if (!accepted) {
      trace.safeguard_stop = true;
      break;
    }
    if (step_norm <= config.step_tolerance) {
      trace.converged = true;
      break;
    }
  }
  return {F, trace};
}

FinalizedPointing finalize(const PointingMatrix& F) {
  FinalizedPointing out;
  out.pointing.resize(3, F.cols());
  out.angles.reserve(static_cast<std::size_t>(F.cols()));
  for (int k = 0; k < F.cols(); ++k) {
    const double norm = F.col(k).norm();
    if (norm == 0.0) {
      throw std::domain_error("finalize: zero-norm pointing column");
    }
    out.pointing.col(k) = F.col(k) / norm;
    out.angles.push_back(angles_from_vector(out.pointing.col(k)));
  }
  return out;
}

}  // namespace rasec
