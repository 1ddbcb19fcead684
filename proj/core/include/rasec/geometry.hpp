// Positions, boresight directions, and the deflection-angle <-> pointing-vector
// correspondence for a planar array of rotatable antennas.
#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace rasec {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

// Columns are per-antenna boresight vectors f_k. Unit norm in physical
// configurations; the deflection optimizer relaxes columns to norm <= 1.
using PointingMatrix = Eigen::Matrix3Xd;

// Boresight orientation of one rotatable antenna. Zenith is measured from the
// +z axis, azimuth from the +x axis in the array plane.
struct DeflectionAngles {
  double zenith = 0.0;   // radians, [0, pi/2)
  double azimuth = 0.0;  // radians, [0, 2*pi)
};

// Unit boresight vector [sin(z)cos(a), sin(z)sin(a), cos(z)].
Vec3 pointing_vector(const DeflectionAngles& angles);

// Inverse of pointing_vector for unit vectors with positive z component.
// At the pole (f = e3) the azimuth is conventionally 0.
// Throws std::domain_error for non-unit input or f.z <= 0.
DeflectionAngles angles_from_vector(const Vec3& f);

// Centered rectangular grid on the z = 0 plane, row-major with x varying
// fastest: element (ix, iy) sits at [(ix-(nx-1)/2)d, (iy-(ny-1)/2)d, 0].
std::vector<Vec3> upa_positions(int nx, int ny, double spacing);

struct ArrayGeometry {
  int nx = 1;
  int ny = 1;
  double spacing = 0.0;         // meters
  std::vector<Vec3> positions;  // size nx*ny, centroid at the origin

  static ArrayGeometry upa(int nx, int ny, double spacing);
  int count() const { return nx * ny; }
};

// Position [r*cos(phi), 0, r*sin(phi)] of a receiver in the x-z plane.
Vec3 node_position(double range, double angle);

// Unit direction from `antenna` towards `node`, plus the separation distance.
// Throws std::domain_error when the points coincide.
std::pair<Vec3, double> direction_and_distance(const Vec3& node, const Vec3& antenna);

}  // namespace rasec
