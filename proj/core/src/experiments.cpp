#include "rasec/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rasec/io.hpp"
#include "rasec/version.hpp"

namespace rasec {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

SchemeKind scheme_from_name(const std::string& name) {
  if (name == "ra") return SchemeKind::RaOptimized;
  if (name == "fixed") return SchemeKind::Fixed;
  if (name == "isotropic") return SchemeKind::Isotropic;
  if (name == "random") return SchemeKind::RandomDeflection;
  throw ConfigError("schemes: unknown scheme '" + name +
                    "' (expected ra|fixed|isotropic|random)");
}

// Runs fn(0..items-1), each index exactly once. Items must not share mutable
// state; aggregation stays with the caller so output is schedule-invariant.
void parallel_for(int items, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || items <= 1) {
    for (int i = 0; i < items; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= items) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min(threads, items);
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Moments {
  double mean = 0.0;
  double std_error = 0.0;
};

// realization-index-order accumulation; bit-stable at any thread count
Moments aggregate(const std::vector<double>& values) {
  Moments m;
  const std::size_t n = values.size();
  if (n == 0) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(n);
  if (n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.std_error = std::sqrt(ss / static_cast<double>(n - 1)) /
                  std::sqrt(static_cast<double>(n));
  }
  return m;
}

std::vector<double> grid_values(const ExperimentConfig& config, SweepAxis axis) {
  std::vector<double> grid;
  switch (axis) {
    case SweepAxis::Power:
      grid = config.power_grid_dbm;
      break;
    case SweepAxis::Antennas:
      for (int k : config.antenna_grid) grid.push_back(static_cast<double>(k));
      break;
    case SweepAxis::Eavesdroppers:
      for (int m : config.eve_grid) grid.push_back(static_cast<double>(m));
      break;
    case SweepAxis::Directivity:
      grid = config.directivity_grid;
      break;
  }
  return grid;
}

// Scenario for one sweep point. The eavesdropper sweep redraws placement
// angles per realization; every other axis keeps the configured placement.
Scenario scenario_at(const ExperimentConfig& config, SweepAxis axis, double grid_value,
                     std::uint64_t realization) {
  Scenario s = config.scenario();
  switch (axis) {
    case SweepAxis::Power:
      s.transmit_power = dbm_to_watt(grid_value);
      break;
    case SweepAxis::Antennas:
      s.grid_x = static_cast<int>(grid_value);
      s.grid_y = static_cast<int>(grid_value);
      break;
    case SweepAxis::Eavesdroppers: {
      const int count = static_cast<int>(grid_value);
      RngStream stream(
          derive_seed(config.master_seed, stream_tag::eve_angles, realization));
      s.eve_angles.resize(static_cast<std::size_t>(count));
      for (int m = 0; m < count; ++m) {
        s.eve_angles[static_cast<std::size_t>(m)] =
            stream.uniform(kPi / 12.0, 11.0 * kPi / 12.0);
      }
      break;
    }
    case SweepAxis::Directivity:
      s.pattern = GainPattern::directional(grid_value);
      break;
  }
  return s;
}

void throw_if_invalid(const ExperimentConfig& config) {
  const auto errors = config.validate();
  if (errors.empty()) return;
  std::string message = "invalid config:";
  for (const auto& e : errors) message += "\n  " + e;
  throw ConfigError(message);
}

}  // namespace

const char* axis_label(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Power: return "power_dbm";
    case SweepAxis::Antennas: return "antennas_per_side";
    case SweepAxis::Eavesdroppers: return "eavesdroppers";
    case SweepAxis::Directivity: return "directivity";
  }
  return "unknown";
}

Scenario ExperimentConfig::scenario() const {
  Scenario s;
  s.grid_x = grid_x;
  s.grid_y = grid_y;
  s.wavelength = wavelength_m;
  s.spacing = spacing_m;
  s.pattern = GainPattern::directional(directivity);
  s.max_zenith = deg_to_rad(max_zenith_deg);
  s.path_loss = {db_to_linear(ref_gain_db), path_loss_exponent, 1.0};
  s.rician_k = rician_k;
  s.pure_los = pure_los;
  s.transmit_power = dbm_to_watt(power_dbm);
  s.noise = {dbm_to_watt(noise_user_dbm), dbm_to_watt(noise_eve_dbm)};
  s.user_range = user_range_m;
  s.user_angle = deg_to_rad(user_angle_deg);
  s.eve_range = eve_range_m;
  s.eve_angles.clear();
  for (double a : eve_angles_deg) s.eve_angles.push_back(deg_to_rad(a));
  return s;
}

AOConfig ExperimentConfig::ao() const {
  AOConfig cfg;
  cfg.rel_tolerance = ao_tolerance;
  cfg.max_outer = ao_max_outer;
  cfg.sca.max_iterations = sca_max_iterations;
  cfg.sca.step_tolerance = sca_step_tolerance;
  cfg.sca.max_halvings = sca_max_halvings;
  return cfg;
}

std::vector<std::string> ExperimentConfig::validate() const {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const char* message) {
    if (!ok) errors.emplace_back(message);
  };
  require(realizations >= 1, "realizations: must be >= 1");
  require(threads >= 1, "threads: must be >= 1");
  require(ao_tolerance > 0.0, "ao_tolerance: must be positive");
  require(ao_max_outer >= 1, "ao_max_outer: must be >= 1");
  require(sca_max_iterations >= 1, "sca_max_iterations: must be >= 1");
  require(sca_step_tolerance > 0.0, "sca_step_tolerance: must be positive");
  require(sca_max_halvings >= 0, "sca_max_halvings: must be >= 0");
  require(!schemes.empty(), "schemes: must not be empty");

  auto check_grid = [&](const auto& grid, const char* name) {
    if (grid.empty()) {
      errors.emplace_back(std::string(name) + ": must not be empty");
      return;
    }
    if (!std::is_sorted(grid.begin(), grid.end())) {
      errors.emplace_back(std::string(name) + ": must be sorted ascending");
    }
  };
  check_grid(power_grid_dbm, "power_grid_dbm");
  check_grid(antenna_grid, "antenna_grid");
  check_grid(eve_grid, "eve_grid");
  check_grid(directivity_grid, "directivity_grid");
  for (int k : antenna_grid) {
    if (k < 1) {
      errors.emplace_back("antenna_grid: entries must be >= 1");
      break;
    }
  }
  for (int m : eve_grid) {
    if (m < 1) {
      errors.emplace_back("eve_grid: entries must be >= 1");
      break;
    }
  }
  for (double p : directivity_grid) {
    if (p < 1.0) {
      errors.emplace_back("directivity_grid: entries must be >= 1");
      break;
    }
  }

  for (const auto& e : scenario().validate()) errors.push_back(e);
  return errors;
}

ExperimentConfig default_config() { return {}; }

Scenario default_scenario() { return ExperimentConfig{}.scenario(); }

// ---- JSON config ----

namespace {

using nlohmann::json;

template <typename T>
T get_as(const json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string(key) + ": wrong type");
  }
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config: top-level value must be an object");
  }

  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") cfg.master_seed = get_as<std::uint64_t>(value, "seed");
    else if (key == "realizations") cfg.realizations = get_as<int>(value, "realizations");
    else if (key == "threads") cfg.threads = get_as<int>(value, "threads");
    else if (key == "kx") cfg.grid_x = get_as<int>(value, "kx");
    else if (key == "ky") cfg.grid_y = get_as<int>(value, "ky");
    else if (key == "wavelength_m") cfg.wavelength_m = get_as<double>(value, "wavelength_m");
    else if (key == "spacing_m") cfg.spacing_m = get_as<double>(value, "spacing_m");
    else if (key == "directivity") cfg.directivity = get_as<double>(value, "directivity");
    else if (key == "max_zenith_deg") cfg.max_zenith_deg = get_as<double>(value, "max_zenith_deg");
    else if (key == "ref_gain_db") cfg.ref_gain_db = get_as<double>(value, "ref_gain_db");
    else if (key == "path_loss_exponent")
      cfg.path_loss_exponent = get_as<double>(value, "path_loss_exponent");
    else if (key == "rician_k") cfg.rician_k = get_as<double>(value, "rician_k");
    else if (key == "pure_los") cfg.pure_los = get_as<bool>(value, "pure_los");
    else if (key == "power_dbm") cfg.power_dbm = get_as<double>(value, "power_dbm");
    else if (key == "noise_user_dbm") cfg.noise_user_dbm = get_as<double>(value, "noise_user_dbm");
    else if (key == "noise_eve_dbm") cfg.noise_eve_dbm = get_as<double>(value, "noise_eve_dbm");
    else if (key == "user_range_m") cfg.user_range_m = get_as<double>(value, "user_range_m");
    else if (key == "user_angle_deg") cfg.user_angle_deg = get_as<double>(value, "user_angle_deg");
    else if (key == "eve_range_m") cfg.eve_range_m = get_as<double>(value, "eve_range_m");
    else if (key == "eve_angles_deg")
      cfg.eve_angles_deg = get_as<std::vector<double>>(value, "eve_angles_deg");
    else if (key == "power_grid_dbm")
      cfg.power_grid_dbm = get_as<std::vector<double>>(value, "power_grid_dbm");
    else if (key == "antenna_grid")
      cfg.antenna_grid = get_as<std::vector<int>>(value, "antenna_grid");
    else if (key == "eve_grid") cfg.eve_grid = get_as<std::vector<int>>(value, "eve_grid");
    else if (key == "directivity_grid")
      cfg.directivity_grid = get_as<std::vector<double>>(value, "directivity_grid");
    else if (key == "schemes") {
      const auto names = get_as<std::vector<std::string>>(value, "schemes");
      cfg.schemes.clear();
      for (const auto& n : names) cfg.schemes.push_back(scheme_from_name(n));
    } else if (key == "out_dir") cfg.out_dir = get_as<std::string>(value, "out_dir");
    else if (key == "format") {
      const auto f = get_as<std::string>(value, "format");
      if (f == "csv") cfg.format = OutputFormat::Csv;
      else if (f == "json") cfg.format = OutputFormat::Json;
      else throw ConfigError("format: expected \"csv\" or \"json\"");
    } else if (key == "ao_tolerance") cfg.ao_tolerance = get_as<double>(value, "ao_tolerance");
    else if (key == "ao_max_outer") cfg.ao_max_outer = get_as<int>(value, "ao_max_outer");
    else if (key == "sca_max_iterations")
      cfg.sca_max_iterations = get_as<int>(value, "sca_max_iterations");
    else if (key == "sca_step_tolerance")
      cfg.sca_step_tolerance = get_as<double>(value, "sca_step_tolerance");
    else if (key == "sca_max_halvings")
      cfg.sca_max_halvings = get_as<int>(value, "sca_max_halvings");
    else throw ConfigError("config: unknown key '" + key + "'");
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

std::string resolved_config_json(const ExperimentConfig& config) {
  json doc;
  doc["seed"] = config.master_seed;
  doc["realizations"] = config.realizations;
  doc["threads"] = config.threads;
  doc["kx"] = config.grid_x;
  doc["ky"] = config.grid_y;
  doc["wavelength_m"] = config.wavelength_m;
  doc["spacing_m"] = config.spacing_m;
  doc["directivity"] = config.directivity;
  doc["max_zenith_deg"] = config.max_zenith_deg;
  doc["ref_gain_db"] = config.ref_gain_db;
  doc["path_loss_exponent"] = config.path_loss_exponent;
  doc["rician_k"] = config.rician_k;
  doc["pure_los"] = config.pure_los;
  doc["power_dbm"] = config.power_dbm;
  doc["noise_user_dbm"] = config.noise_user_dbm;
  doc["noise_eve_dbm"] = config.noise_eve_dbm;
  doc["user_range_m"] = config.user_range_m;
  doc["user_angle_deg"] = config.user_angle_deg;
  doc["eve_range_m"] = config.eve_range_m;
  doc["eve_angles_deg"] = config.eve_angles_deg;
  doc["power_grid_dbm"] = config.power_grid_dbm;
  doc["antenna_grid"] = config.antenna_grid;
  doc["eve_grid"] = config.eve_grid;
  doc["directivity_grid"] = config.directivity_grid;
  std::vector<std::string> names;
  for (SchemeKind s : config.schemes) names.emplace_back(scheme_name(s));
  doc["schemes"] = names;
  doc["out_dir"] = config.out_dir;
  doc["format"] = config.format == OutputFormat::Csv ? "csv" : "json";
  doc["ao_tolerance"] = config.ao_tolerance;
  doc["ao_max_outer"] = config.ao_max_outer;
  doc["sca_max_iterations"] = config.sca_max_iterations;
  doc["sca_step_tolerance"] = config.sca_step_tolerance;
  doc["sca_max_halvings"] = config.sca_max_halvings;
  return doc.dump(2);
}

// ---- runners ----

SweepResult run_monte_carlo(const ExperimentConfig& config, SweepAxis axis) {
  throw_if_invalid(config);
  const std::vector<double> grid = grid_values(config, axis);
  const auto& schemes = config.schemes;
  const int G = static_cast<int>(grid.size());
  const int S = static_cast<int>(schemes.size());
  const int N = config.realizations;
  const AOConfig ao_config = config.ao();

  std::vector<double> values(static_cast<std::size_t>(G) * S * N, 0.0);
  std::vector<double> iterations(static_cast<std::size_t>(G) * N, 0.0);

  parallel_for(G * N, config.threads, [&](int item) {
    const int g = item / N;
    const int r = item % N;
    const Scenario s = scenario_at(config, axis, grid[static_cast<std::size_t>(g)],
                                   static_cast<std::uint64_t>(r));
    const ChannelSet cs =
        realize_channels(s, config.master_seed, static_cast<std::uint64_t>(r));
    for (int si = 0; si < S; ++si) {
      double value = 0.0;
      if (schemes[static_cast<std::size_t>(si)] == SchemeKind::RaOptimized) {
        const AOResult res = run_ao(s, cs, ao_config);
        value = res.final_secrecy_rate();
        iterations[static_cast<std::size_t>(g) * N + r] =
            static_cast<double>(res.outer_iterations);
      } else {
        RngStream stream(derive_seed(config.master_seed, stream_tag::deflection,
                                     static_cast<std::uint64_t>(r)));
        value = run_benchmark(schemes[static_cast<std::size_t>(si)], s, cs, stream)
                    .report.secrecy_rate;
      }
      values[(static_cast<std::size_t>(g) * S + si) * N + r] = value;
    }
  });

  SweepResult result;
  result.axis = axis;
  for (int g = 0; g < G; ++g) {
    for (int si = 0; si < S; ++si) {
      SweepCell cell;
      cell.grid_value = grid[static_cast<std::size_t>(g)];
      cell.scheme = schemes[static_cast<std::size_t>(si)];
      cell.n = N;
      const auto begin =
          values.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(g) * S + si) * N);
      cell.values.assign(begin, begin + N);
      const Moments m = aggregate(cell.values);
      cell.mean = m.mean;
      cell.std_error = m.std_error;
      if (cell.scheme == SchemeKind::RaOptimized) {
        double sum = 0.0;
        for (int r = 0; r < N; ++r) sum += iterations[static_cast<std::size_t>(g) * N + r];
        cell.mean_iterations = sum / N;
      }
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

SweepResult sweep_power(const ExperimentConfig& config) {
  return run_monte_carlo(config, SweepAxis::Power);
}

SweepResult sweep_antennas(const ExperimentConfig& config) {
  return run_monte_carlo(config, SweepAxis::Antennas);
}

SweepResult sweep_eavesdroppers(const ExperimentConfig& config) {
  return run_monte_carlo(config, SweepAxis::Eavesdroppers);
}

ConvergenceResult sweep_directivity(const ExperimentConfig& config) {
  throw_if_invalid(config);
  const std::vector<double> grid = config.directivity_grid;
  const int G = static_cast<int>(grid.size());
  const int N = config.realizations;
  const AOConfig ao_config = config.ao();

  std::vector<std::vector<double>> traces(static_cast<std::size_t>(G) * N);
  std::vector<double> iterations(static_cast<std::size_t>(G) * N, 0.0);

  parallel_for(G * N, config.threads, [&](int item) {
    const int g = item / N;
    const int r = item % N;
    const Scenario s = scenario_at(config, SweepAxis::Directivity,
                                   grid[static_cast<std::size_t>(g)],
                                   static_cast<std::uint64_t>(r));
    const ChannelSet cs =
        realize_channels(s, config.master_seed, static_cast<std::uint64_t>(r));
    const AOResult res = run_ao(s, cs, ao_config);
    auto& trace = traces[static_cast<std::size_t>(g) * N + r];
    trace.reserve(res.trace.size());
    for (const auto& entry : res.trace) trace.push_back(entry.secrecy_rate);
    iterations[static_cast<std::size_t>(g) * N + r] =
        static_cast<double>(res.outer_iterations);
  });

  ConvergenceResult result;
  result.summary.axis = SweepAxis::Directivity;
  for (int g = 0; g < G; ++g) {
    std::size_t longest = 0;
    for (int r = 0; r < N; ++r) {
      longest = std::max(longest, traces[static_cast<std::size_t>(g) * N + r].size());
    }
    std::vector<double> finals(static_cast<std::size_t>(N));
    for (int r = 0; r < N; ++r) {
      finals[static_cast<std::size_t>(r)] = traces[static_cast<std::size_t>(g) * N + r].back();
    }
    // converged runs hold their final value on later iterations
    std::vector<double> column(static_cast<std::size_t>(N));
    for (std::size_t i = 0; i < longest; ++i) {
      for (int r = 0; r < N; ++r) {
        const auto& trace = traces[static_cast<std::size_t>(g) * N + r];
        column[static_cast<std::size_t>(r)] = trace[std::min(i, trace.size() - 1)];
      }
      const Moments m = aggregate(column);
      result.rows.push_back({grid[static_cast<std::size_t>(g)], static_cast<int>(i),
                             m.mean, m.std_error, N});
    }

    SweepCell cell;
    cell.grid_value = grid[static_cast<std::size_t>(g)];
    cell.scheme = SchemeKind::RaOptimized;
    cell.n = N;
    cell.values = finals;
    const Moments m = aggregate(finals);
    cell.mean = m.mean;
    cell.std_error = m.std_error;
    double sum = 0.0;
    for (int r = 0; r < N; ++r) sum += iterations[static_cast<std::size_t>(g) * N + r];
    cell.mean_iterations = sum / N;
    result.summary.cells.push_back(std::move(cell));
  }
  return result;
}

PatternResult gain_pattern(const ExperimentConfig& config) {
  throw_if_invalid(config);
  const Scenario base = config.scenario();
  const ChannelSet cs = realize_channels(base, config.master_seed, 0);
  const AOConfig ao_config = config.ao();

  PatternResult result;
  result.schemes = config.schemes;
  result.phi.reserve(181);
  for (int j = 0; j <= 180; ++j) result.phi.push_back(j * kPi / 180.0);

  for (SchemeKind scheme : config.schemes) {
    Eigen::VectorXcd weights;
    PointingMatrix pointing;
    Scenario probe_scenario = base;
    if (scheme == SchemeKind::RaOptimized) {
      AOResult res = run_ao(base, cs, ao_config);
      weights = std::move(res.beamformer.weights);
      pointing = std::move(res.pointing);
    } else {
      RngStream stream(derive_seed(config.master_seed, stream_tag::deflection, 0));
      BenchmarkResult res = run_benchmark(scheme, base, cs, stream);
      weights = std::move(res.beamformer.weights);
      pointing = std::move(res.pointing);
      if (scheme == SchemeKind::Isotropic) {
        probe_scenario.pattern = GainPattern::isotropic();
      }
    }
    std::vector<double> gains;
    gains.reserve(result.phi.size());
    for (double phi : result.phi) {
      gains.push_back(array_gain_probe(weights, pointing, probe_scenario, phi));
    }
    result.gain_db.push_back(std::move(gains));
  }
  return result;
}

// ---- emission ----

namespace {

std::string manifest_text(const ExperimentConfig& config, const std::string& name) {
  json doc;
  doc["experiment"] = name;
  doc["version"] = std::string(kVersion);
  doc["master_seed"] = config.master_seed;
  doc["config"] = json::parse(resolved_config_json(config));
  return doc.dump(2) + "\n";
}

EmittedFiles write_pair(const ExperimentConfig& config, const std::string& name,
                        const std::string& data, const char* extension) {
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);
  EmittedFiles files;
  files.data_path = (fs::path(config.out_dir) / (name + extension)).string();
  files.manifest_path = (fs::path(config.out_dir) / (name + "_manifest.json")).string();
  write_text_file(files.data_path, data);
  write_text_file(files.manifest_path, manifest_text(config, name));
  return files;
}

}  // namespace

EmittedFiles emit(const SweepResult& result, const ExperimentConfig& config,
                  const std::string& name) {
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["experiment"] = name;
    doc["axis"] = axis_label(result.axis);
    json cells = json::array();
    for (const auto& cell : result.cells) {
      json c;
      c["grid_value"] = cell.grid_value;
      c["scheme"] = scheme_name(cell.scheme);
      c["mean"] = cell.mean;
      c["stderr"] = cell.std_error;
      c["n"] = cell.n;
      c["mean_iterations"] = cell.mean_iterations;
      c["values"] = cell.values;
      cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);
    return write_pair(config, name, doc.dump(2) + "\n", ".json");
  }

  std::string csv = csv_line({"grid_value", "scheme", "mean", "stderr", "n"});
  for (const auto& cell : result.cells) {
    csv += csv_line({format_double(cell.grid_value), scheme_name(cell.scheme),
                     format_double(cell.mean), format_double(cell.std_error),
                     std::to_string(cell.n)});
  }
  return write_pair(config, name, csv, ".csv");
}

EmittedFiles emit(const ConvergenceResult& result, const ExperimentConfig& config,
                  const std::string& name) {
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["experiment"] = name;
    json rows = json::array();
    for (const auto& row : result.rows) {
      json r;
      r["directivity"] = row.directivity;
      r["iteration"] = row.iteration;
      r["mean_rsec"] = row.mean_secrecy_rate;
      r["stderr"] = row.std_error;
      r["n"] = row.n;
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    json summary = json::array();
    for (const auto& cell : result.summary.cells) {
      json c;
      c["directivity"] = cell.grid_value;
      c["mean"] = cell.mean;
      c["stderr"] = cell.std_error;
      c["n"] = cell.n;
      c["mean_iterations"] = cell.mean_iterations;
      c["values"] = cell.values;
      summary.push_back(std::move(c));
    }
    doc["summary"] = std::move(summary);
    return write_pair(config, name, doc.dump(2) + "\n", ".json");
  }

  std::string csv = csv_line({"p", "iteration", "mean_rsec", "stderr", "n"});
  for (const auto& row : result.rows) {
    csv += csv_line({format_double(row.directivity), std::to_string(row.iteration),
                     format_double(row.mean_secrecy_rate), format_double(row.std_error),
                     std::to_string(row.n)});
  }
  return write_pair(config, name, csv, ".csv");
}

EmittedFiles emit(const PatternResult& result, const ExperimentConfig& config,
                  const std::string& name) {
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["experiment"] = name;
    doc["phi_rad"] = result.phi;
    json gains;
    for (std::size_t si = 0; si < result.schemes.size(); ++si) {
      gains[scheme_name(result.schemes[si])] = result.gain_db[si];
    }
    doc["gain_db"] = std::move(gains);
    return write_pair(config, name, doc.dump(2) + "\n", ".json");
  }

  std::vector<std::string> header{"phi_rad"};
  for (SchemeKind s : result.schemes) header.emplace_back(scheme_name(s));
  std::string csv = csv_line(header);
  for (std::size_t j = 0; j < result.phi.size(); ++j) {
    std::vector<std::string> fields{format_double(result.phi[j])};
    for (std::size_t si = 0; si < result.schemes.size(); ++si) {
      fields.push_back(format_double(result.gain_db[si][j]));
    }
    csv += csv_line(fields);
  }
  return write_pair(config, name, csv, ".csv");
}

}  // namespace rasec
