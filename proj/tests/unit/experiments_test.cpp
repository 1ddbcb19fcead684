#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "rasec/experiments.hpp"
#include "rasec/io.hpp"

using namespace rasec;

namespace {

constexpr double kPi = std::numbers::pi;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ExperimentConfig tiny_config(const std::string& out_dir) {
  ExperimentConfig cfg;
  cfg.realizations = 4;
  cfg.power_grid_dbm = {10.0, 20.0};
  cfg.antenna_grid = {2, 3};
  cfg.eve_grid = {1, 2};
  cfg.directivity_grid = {1.0, 4.0};
  cfg.grid_x = 2;
  cfg.grid_y = 2;
  cfg.out_dir = out_dir;
  return cfg;
}

}  // namespace

TEST_CASE("default scenario matches the reference setup") {
  const Scenario s = default_scenario();
  CHECK(s.antenna_count() == 16);
  CHECK(s.wavelength == 0.125);
  CHECK(s.spacing == 0.0625);
  CHECK(s.pattern.directivity == 4.0);
  CHECK(s.pattern.peak_gain == 18.0);
  CHECK(s.max_zenith == doctest::Approx(kPi / 6.0).epsilon(1e-12));
  CHECK(s.path_loss.ref_gain == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(s.path_loss.exponent == 3.0);
  CHECK(s.rician_k == 1.0);
  CHECK(s.noise.user == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(s.noise.eve == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(s.transmit_power == doctest::Approx(dbm_to_watt(15.0)).epsilon(1e-12));

  const Vec3 user = s.node_pos(0);
  CHECK(user.x() == doctest::Approx(25.0).epsilon(1e-9));
  CHECK(user.y() == 0.0);
  CHECK(user.z() == doctest::Approx(43.30127018922193).epsilon(1e-9));

  REQUIRE(s.eve_angles.size() == 3);
  CHECK(s.eve_angles[0] == doctest::Approx(5.0 * kPi / 12.0).epsilon(1e-12));
  CHECK(s.eve_angles[1] == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(s.eve_angles[2] == doctest::Approx(kPi / 6.0).epsilon(1e-12));
  CHECK(s.validate().empty());
}

TEST_CASE("single-realization sweep equals a direct run") {
  ExperimentConfig cfg;
  cfg.realizations = 1;
  cfg.power_grid_dbm = {20.0};
  cfg.schemes = {SchemeKind::RaOptimized};
  cfg.grid_x = 2;
  cfg.grid_y = 2;

  const SweepResult sweep = sweep_power(cfg);
  REQUIRE(sweep.cells.size() == 1);
  REQUIRE(sweep.cells[0].values.size() == 1);

  Scenario s = cfg.scenario();
  s.transmit_power = dbm_to_watt(20.0);
  const ChannelSet cs = realize_channels(s, cfg.master_seed, 0);
  const AOResult direct = run_ao(s, cs, cfg.ao());
  CHECK(sweep.cells[0].values[0] == direct.final_secrecy_rate());  // bit-identical
  CHECK(sweep.cells[0].mean == direct.final_secrecy_rate());
}

TEST_CASE("paired optimized-vs-fixed differences are non-negative") {
  ExperimentConfig cfg;
  cfg.realizations = 10;
  cfg.power_grid_dbm = {20.0};
  cfg.schemes = {SchemeKind::RaOptimized, SchemeKind::Fixed};
  cfg.grid_x = 3;
  cfg.grid_y = 3;

  const SweepResult sweep = sweep_power(cfg);
  REQUIRE(sweep.cells.size() == 2);
  const auto& ra = sweep.cells[0];
  const auto& fixed = sweep.cells[1];
  for (int r = 0; r < cfg.realizations; ++r) {
    CHECK(ra.values[static_cast<std::size_t>(r)] >=
          fixed.values[static_cast<std::size_t>(r)] - 1e-9);
  }
}

TEST_CASE("cell means equal the arithmetic mean of stored values") {
  ExperimentConfig cfg = tiny_config("out_test_mean");
  cfg.schemes = {SchemeKind::Fixed, SchemeKind::RandomDeflection};
  const SweepResult sweep = sweep_eavesdroppers(cfg);
  for (const auto& cell : sweep.cells) {
    REQUIRE(cell.values.size() == static_cast<std::size_t>(cell.n));
    double sum = 0.0;
    for (double v : cell.values) sum += v;
    CHECK(cell.mean == doctest::Approx(sum / cell.n).epsilon(1e-12));
  }
}

TEST_CASE("reruns and thread counts do not change emitted bytes") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = tiny_config("out_test_determinism_a");
  cfg.schemes = {SchemeKind::RaOptimized, SchemeKind::Fixed};
  cfg.threads = 1;

  const EmittedFiles a = emit(sweep_power(cfg), cfg, "sweep_power");

  ExperimentConfig cfg4 = cfg;
  cfg4.out_dir = "out_test_determinism_b";
  cfg4.threads = 4;
  const EmittedFiles b = emit(sweep_power(cfg4), cfg4, "sweep_power");

  CHECK(slurp(a.data_path) == slurp(b.data_path));

  // re-emit in place: byte-identical
  const EmittedFiles a2 = emit(sweep_power(cfg), cfg, "sweep_power");
  CHECK(slurp(a.data_path) == slurp(a2.data_path));

  fs::remove_all("out_test_determinism_a");
  fs::remove_all("out_test_determinism_b");
}

TEST_CASE("sweep CSV schema") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = tiny_config("out_test_schema");
  cfg.realizations = 2;
  const EmittedFiles files = emit(sweep_power(cfg), cfg, "sweep_power");

  const std::string csv = slurp(files.data_path);
  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "grid_value,scheme,mean,stderr,n");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 4);  // 5 columns
    ++rows;
  }
  CHECK(rows == 2 * 4);  // grid points x schemes
  fs::remove_all("out_test_schema");
}

TEST_CASE("pattern experiment emits 181 rows") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = tiny_config("out_test_pattern");
  cfg.schemes = {SchemeKind::Fixed, SchemeKind::Isotropic};
  const PatternResult pattern = gain_pattern(cfg);
  REQUIRE(pattern.phi.size() == 181);
  CHECK(pattern.phi.front() == 0.0);
  CHECK(pattern.phi.back() == doctest::Approx(kPi).epsilon(1e-12));

  const EmittedFiles files = emit(pattern, cfg, "pattern");
  const std::string csv = slurp(files.data_path);
  const long rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 182);  // header + 181 samples
  fs::remove_all("out_test_pattern");
}

TEST_CASE("convergence traces are emitted per directivity") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = tiny_config("out_test_converge");
  cfg.realizations = 3;
  cfg.directivity_grid = {1.0, 4.0};
  const ConvergenceResult res = sweep_directivity(cfg);
  REQUIRE(res.summary.cells.size() == 2);
  for (const auto& cell : res.summary.cells) {
    CHECK(cell.mean_iterations >= 1.0);
    CHECK(cell.n == 3);
  }
  // iteration 0 exists for every directivity and traces are non-decreasing
  for (const auto& row : res.rows) {
    CHECK(row.n == 3);
  }
  const EmittedFiles files = emit(res, cfg, "convergence");
  const std::string csv = slurp(files.data_path);
  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "p,iteration,mean_rsec,stderr,n");
  fs::remove_all("out_test_converge");
}

TEST_CASE("config JSON round-trips through the resolver") {
  ExperimentConfig cfg = default_config();
  cfg.master_seed = 42;
  cfg.eve_angles_deg = {75.0, 120.0};
  cfg.schemes = {SchemeKind::RaOptimized, SchemeKind::Isotropic};
  cfg.format = OutputFormat::Json;

  const std::string once = resolved_config_json(cfg);
  const ExperimentConfig parsed = parse_config_json(once);
  CHECK(resolved_config_json(parsed) == once);
}

TEST_CASE("config parsing rejects bad input with field names") {
  CHECK_THROWS_WITH_AS(parse_config_json("{\"bogus\": 1}"),
                       "config: unknown key 'bogus'", ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_json("{\"realizations\": \"many\"}"),
                       "realizations: wrong type", ConfigError);
  CHECK_THROWS_AS(parse_config_json("{\"schemes\": [\"psychic\"]}"), ConfigError);
  CHECK_THROWS_AS(parse_config_json("not json"), ConfigError);

  ExperimentConfig cfg;
  cfg.realizations = 0;
  CHECK(!cfg.validate().empty());

  cfg = ExperimentConfig{};
  cfg.max_zenith_deg = 90.0;  // must be strictly inside (0, 90)
  CHECK(!cfg.validate().empty());

  cfg = ExperimentConfig{};
  cfg.directivity = 0.5;
  CHECK(!cfg.validate().empty());

  cfg = ExperimentConfig{};
  cfg.user_angle_deg = 200.0;
  CHECK(!cfg.validate().empty());

  cfg = ExperimentConfig{};
  cfg.power_grid_dbm = {10.0, 5.0};  // unsorted
  CHECK(!cfg.validate().empty());

  cfg = ExperimentConfig{};
  cfg.eve_grid.clear();
  CHECK(!cfg.validate().empty());
}

TEST_CASE("formatting is locale-free and 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-9) == "-2.5000000000000001e-09");
  CHECK(csv_line({"a", "b", "c"}) == "a,b,c\n");
}
