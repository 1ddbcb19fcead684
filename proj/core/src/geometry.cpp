#include "rasec/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rasec {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Vec3 pointing_vector(const DeflectionAngles& angles) {
  const double sz = std::sin(angles.zenith);
  return {sz * std::cos(angles.azimuth), sz * std::sin(angles.azimuth), std::cos(angles.zenith)};
}

DeflectionAngles angles_from_vector(const Vec3& f) {
  if (std::abs(f.norm() - 1.0) > 1e-9) {
    throw std::domain_error("angles_from_vector: input is not a unit vector");
  }
  if (f.z() <= 0.0) {
    throw std::domain_error("angles_from_vector: boresight must have positive z component");
  }
  DeflectionAngles out;
  out.zenith = std::acos(std::min(f.z(), 1.0));
  if (f.x() == 0.0 && f.y() == 0.0) {
    out.azimuth = 0.0;  // canonical azimuth at the pole
    return out;
  }
  out.azimuth = std::atan2(f.y(), f.x());
  if (out.azimuth < 0.0) out.azimuth += kTwoPi;
  if (out.azimuth >= kTwoPi) out.azimuth = 0.0;
  return out;
}

std::vector<Vec3> upa_positions(int nx, int ny, double spacing) {
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("upa_positions: grid dimensions must be >= 1");
  }
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  const double cx = 0.5 * (nx - 1);
  const double cy = 0.5 * (ny - 1);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      out.emplace_back((ix - cx) * spacing, (iy - cy) * spacing, 0.0);
    }
  }
  return out;
}

ArrayGeometry ArrayGeometry::upa(int nx, int ny, double spacing) {
  ArrayGeometry g;
  g.nx = nx;
  g.ny = ny;
  g.spacing = spacing;
  g.positions = upa_positions(nx, ny, spacing);
  return g;
}

Vec3 node_position(double range, double angle) {
  return {range * std::cos(angle), 0.0, range * std::sin(angle)};
}

std::pair<Vec3, double> direction_and_distance(const Vec3& node, const Vec3& antenna) {
  const Vec3 delta = node - antenna;
  const double dist = delta.norm();
  if (dist == 0.0) {
    throw std::domain_error("direction_and_distance: coincident points");
  }
  return {delta / dist, dist};
}

}  // namespace rasec
