// Immutable description of one experiment setup: array geometry, node
// placement, propagation constants, and power/noise budgets.
#pragma once

#include <string>
#include <vector>

#include "rasec/channel.hpp"
#include "rasec/geometry.hpp"
#include "rasec/rates.hpp"

namespace rasec {

struct Scenario {
  // array
  int grid_x = 4;
  int grid_y = 4;
  double wavelength = 0.125;  // m (2.4 GHz)
  double spacing = 0.0625;    // m, half wavelength
  GainPattern pattern = GainPattern::directional(4.0);
  double max_zenith = 0.5235987755982988;  // pi/6

  // propagation
  PathLossModel path_loss{1e-3, 3.0, 1.0};
  double rician_k = 1.0;
  bool pure_los = false;

  // budgets
  double transmit_power = 0.03162277660168379;  // W (15 dBm)
  NoiseBudget noise{1e-9, 1e-9};

  // placement (x-z plane, angles from the +x axis)
  double user_range = 50.0;
  double user_angle = 1.0471975511965976;  // pi/3
  double eve_range = 70.0;
  std::vector<double> eve_angles{1.3089969389957472,   // 5*pi/12
                                 2.0943951023931953,   // 2*pi/3
                                 0.5235987755982988};  // pi/6

  int antenna_count() const { return grid_x * grid_y; }
  int eavesdropper_count() const { return static_cast<int>(eve_angles.size()); }
  int node_count() const { return eavesdropper_count() + 1; }

  std::vector<Vec3> antenna_positions() const;
  // node 0 is the user; nodes 1..M are the eavesdroppers
  Vec3 node_pos(int node) const;
  RicianParams rician() const { return {rician_k, wavelength, pure_los}; }

  // Field-named validation failures; empty when the scenario is usable.
  std::vector<std::string> validate() const;
};

}  // namespace rasec
