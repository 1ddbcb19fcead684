// Experiment harness: boundary-unit configuration (degrees, dBm), seeded
// Monte Carlo over fading realizations, parameter sweeps, and CSV/JSON
// emission with a resolved-config manifest next to every data file.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rasec/ao.hpp"
#include "rasec/scenario.hpp"

namespace rasec {

enum class SweepAxis { Power, Antennas, Eavesdroppers, Directivity };
enum class OutputFormat { Csv, Json };

const char* axis_label(SweepAxis axis);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All angles in degrees and powers in dBm/dB here; conversion to radians and
// watts happens once, in scenario(). Defaults reproduce the reference setup.
struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  int realizations = 200;
  int threads = 1;

  // array
  int grid_x = 4;
  int grid_y = 4;
  double wavelength_m = 0.125;
  double spacing_m = 0.0625;
  double directivity = 4.0;
  double max_zenith_deg = 30.0;

  // propagation
  double ref_gain_db = -30.0;
  double path_loss_exponent = 3.0;
  double rician_k = 1.0;
  bool pure_los = false;

  // budgets
  double power_dbm = 15.0;
  double noise_user_dbm = -60.0;
  double noise_eve_dbm = -60.0;

  // placement
  double user_range_m = 50.0;
  double user_angle_deg = 60.0;
  double eve_range_m = 70.0;
  std::vector<double> eve_angles_deg{75.0, 120.0, 30.0};

  // sweep grids
  std::vector<double> power_grid_dbm{0, 5, 10, 15, 20, 25, 30};
  std::vector<int> antenna_grid{2, 3, 4, 5};       // k, array is k-by-k
  std::vector<int> eve_grid{1, 2, 3, 4, 5, 6};     // M
  std::vector<double> directivity_grid{1, 2, 4};   // p

  // run
  std::vector<SchemeKind> schemes{SchemeKind::RaOptimized, SchemeKind::Fixed,
                                  SchemeKind::Isotropic, SchemeKind::RandomDeflection};
  std::string out_dir = "out";
  OutputFormat format = OutputFormat::Csv;

  // solver
  double ao_tolerance = 1e-8;
  int ao_max_outer = 50;
  int sca_max_iterations = 100;
  double sca_step_tolerance = 1e-9;
  int sca_max_halvings = 10;

  Scenario scenario() const;
  AOConfig ao() const;
  // Field-named validation failures; empty when the config is runnable.
  std::vector<std::string> validate() const;
};

ExperimentConfig default_config();
Scenario default_scenario();

// Strict JSON parsing: unknown keys and wrong types are ConfigErrors naming
// the offending field. Missing keys keep their defaults.
ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);
std::string resolved_config_json(const ExperimentConfig& config);

struct SweepCell {
  double grid_value = 0.0;
  SchemeKind scheme = SchemeKind::RaOptimized;
  double mean = 0.0;
  double std_error = 0.0;
  int n = 0;
  double mean_iterations = 0.0;    // outer AO iterations; 0 for one-shot schemes
  std::vector<double> values;      // per-realization secrecy rates, index order
};

struct SweepResult {
  SweepAxis axis = SweepAxis::Power;
  std::vector<SweepCell> cells;  // grid-major, scheme order as configured
};

// Paired Monte Carlo: every scheme at one (grid point, realization) sees the
// same fading draws, and aggregation runs in realization-index order so the
// output is identical at any thread count.
SweepResult run_monte_carlo(const ExperimentConfig& config, SweepAxis axis);

SweepResult sweep_power(const ExperimentConfig& config);
SweepResult sweep_antennas(const ExperimentConfig& config);
SweepResult sweep_eavesdroppers(const ExperimentConfig& config);

struct ConvergenceRow {
  double directivity = 0.0;
  int iteration = 0;  // 0 is the all-e3 start with its optimal beamformer
  double mean_secrecy_rate = 0.0;
  double std_error = 0.0;
  int n = 0;
};

struct ConvergenceResult {
  SweepResult summary;              // converged rates per directivity
  std::vector<ConvergenceRow> rows; // traces padded with their final value
};

// Optimized-scheme traces for each directivity in the grid.
ConvergenceResult sweep_directivity(const ExperimentConfig& config);

struct PatternResult {
  std::vector<SchemeKind> schemes;
  std::vector<double> phi;              // 181 points over [0, pi]
  std::vector<std::vector<double>> gain_db;  // [scheme][phi index]
};

// Array-gain probe versus receiver angle after configuring every scheme on
// fading realization 0.
PatternResult gain_pattern(const ExperimentConfig& config);

struct EmittedFiles {
  std::string data_path;
  std::string manifest_path;
};

EmittedFiles emit(const SweepResult& result, const ExperimentConfig& config,
                  const std::string& name);
EmittedFiles emit(const ConvergenceResult& result, const ExperimentConfig& config,
                  const std::string& name);
EmittedFiles emit(const PatternResult& result, const ExperimentConfig& config,
                  const std::string& name);

}  // namespace rasec
