// Successive convex approximation of the pointing matrix for a fixed
// beamformer: channel gradients, first-order model of the rate difference,
// closed-form solution of the relaxed per-antenna subproblem, and a
// safeguarded ascent loop.
#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "rasec/channel.hpp"
#include "rasec/geometry.hpp"
#include "rasec/rates.hpp"

namespace rasec {

// d h_{m,k} / d f_k = amplitude * p * (f.q)^(p-1) * q on the front
// hemisphere, zero elsewhere.
CVec3 channel_gradient(const Vec3& pointing, std::complex<double> amplitude,
                       const Vec3& direction, double directivity);

// First-order model of R_u - R_e around an expansion point: exact rates at
// the anchor plus one real 3-vector slope per antenna.
struct LinearizationTerms {
  double user_rate_at_anchor = 0.0;  // bps/Hz
  double eve_rate_at_anchor = 0.0;   // bps/Hz
  Eigen::Matrix3Xd slopes;           // column k: gradient of R_u - R_e w.r.t. f_k

  double model_value(const PointingMatrix& F, const PointingMatrix& anchor) const;
};

LinearizationTerms linearize(const Eigen::VectorXcd& v, const PointingMatrix& anchor,
                             const ChannelSet& channels, const NoiseBudget& noise);

// argmax of slope . f over the relaxed feasible set {|f| <= 1, f.e3 >= cos(max_zenith)}.
// Ties resolve toward `current` (zero slope keeps the antenna where it is).
Vec3 solve_antenna_subproblem(const Vec3& slope, double max_zenith, const Vec3& current);

PointingMatrix solve_subproblem(const Eigen::Matrix3Xd& slopes, double max_zenith,
                                const PointingMatrix& current);

struct ScaConfig {
  int max_iterations = 100;
  double step_tolerance = 1e-9;  // Frobenius norm of the pointing update
  int max_halvings = 10;
};

struct ScaTrace {
  int iterations = 0;
  int damped_steps = 0;       // accepted steps that required halving
  bool safeguard_stop = false;  // no step (damped or not) kept the objective
  bool converged = false;       // update norm fell below tolerance
};

// Iterates linearize -> solve_subproblem. A candidate is accepted only if the
// true (unclamped) secrecy objective does not decrease; otherwise the step is
// halved toward the current point, and the loop stops if ten halvings fail.
std::pair<PointingMatrix, ScaTrace> optimize_pointing(const Eigen::VectorXcd& v,
                                                      const PointingMatrix& start,
                                                      const ChannelSet& channels,
                                                      const NoiseBudget& noise,
                                                      double max_zenith,
                                                      const ScaConfig& config);

struct FinalizedPointing {
  PointingMatrix pointing;              // unit columns
  std::vector<DeflectionAngles> angles;
};

// Normalizes every column and extracts deflection angles. Throws
// std::domain_error on a zero column.
FinalizedPointing finalize(const PointingMatrix& F);

}  // namespace rasec
