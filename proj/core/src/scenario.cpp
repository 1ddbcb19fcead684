#include "rasec/scenario.hpp"

#include <cmath>
#include <numbers>

namespace rasec {

std::vector<Vec3> Scenario::antenna_positions() const {
  return upa_positions(grid_x, grid_y, spacing);
}

Vec3 Scenario::node_pos(int node) const {
  if (node == 0) return node_position(user_range, user_angle);
  return node_position(eve_range, eve_angles[static_cast<std::size_t>(node - 1)]);
}

std::vector<std::string> Scenario::validate() const {
  constexpr double pi = std::numbers::pi;
  std::vector<std::string> errors;
  auto require = [&](bool ok, const char* message) {
    if (!ok) errors.emplace_back(message);
  };

  require(grid_x >= 1 && grid_y >= 1, "grid_x/grid_y: must be >= 1");
  require(wavelength > 0.0, "wavelength: must be positive");
  require(spacing > 0.0, "spacing: must be positive");
  require(max_zenith > 0.0 && max_zenith < pi / 2.0,
          "max_zenith: must lie in (0, pi/2)");
  if (pattern.kind == GainPattern::Kind::Directional) {
    require(pattern.directivity >= 1.0, "directivity: must be >= 1");
  }
  require(path_loss.ref_gain > 0.0, "ref_gain: must be positive");
  require(path_loss.exponent > 0.0, "path_loss_exponent: must be positive");
  require(rician_k >= 0.0, "rician_k: must be non-negative");
  require(transmit_power > 0.0, "transmit_power: must be positive");
  require(noise.user > 0.0, "noise_user: must be positive");
  require(noise.eve > 0.0, "noise_eve: must be positive");
  require(user_range > 0.0, "user_range: must be positive");
  require(eve_range > 0.0 || eve_angles.empty(), "eve_range: must be positive");
  require(user_angle >= 0.0 && user_angle <= pi, "user_angle: must lie in [0, pi]");
  for (double a : eve_angles) {
    if (a < 0.0 || a > pi) {
      errors.emplace_back("eve_angles: entries must lie in [0, pi]");
      break;
    }
  }
  return errors;
}

}  // namespace rasec
