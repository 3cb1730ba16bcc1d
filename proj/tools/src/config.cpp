#include "vstokes/cli/config.hpp"

#include <fstream>

namespace vstokes::cli {

nlohmann::json default_config() {
  return {
      {"lambda", 50.0},
      {"gravity", {0.0, 0.0, -1.0}},
      {"box_length", 8.0},
      {"grid_n", 64},
      {"n_particles", 100000},
      {"dt", 0.005},
      {"t_final", 1.0},
      {"brinkman_tol", 1e-9},
      {"brinkman_max_iter", 200},
      {"picard_damping", 0.7},
      {"seed", 12345},
      {"push_scheme", "exponential_midpoint"},
      {"dealias", false},
      {"threads", 1},
      {"family", "gaussian_bump"},
      {"center_x", {4.0, 4.0, 5.0}},
      {"radius_x", 1.0},
      {"center_v", {0.0, 0.0, 0.0}},
      {"radius_v", 1.0},
      {"prepared_velocities", false},
      {"snapshot_stride", 50},
      {"delta_list", {0.8, 0.4}},
      {"cube_lattice_spacing", 0.0},
      {"lambda_list", {10.0, 20.0, 40.0, 80.0, 160.0}},
      {"u_error_times", {0.5}},
      {"output_dir", "vstokes_out"},
  };
}

namespace {

std::vector<double> number_list(const nlohmann::json& raw, const char* key) {
  const auto& v = raw.at(key);
  if (!v.is_array()) throw ConfigError(std::string(key) + " must be a list of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(std::string(key) + " must be a list of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

template <class T>
T typed(const nlohmann::json& raw, const char* key, bool (nlohmann::json::*check)() const noexcept,
        const char* what) {
  const auto& v = raw.at(key);
  if (!(v.*check)()) throw ConfigError(std::string(key) + " must be " + what);
  return v.get<T>();
}

}  // namespace

ScenarioOptions ScenarioConfig::scenario_options() const {
  ScenarioOptions o;
  o.kinetic.scheme = push_scheme;
  o.kinetic.damping = picard_damping;
  o.kinetic.stokes.dealias = dealias;
  o.kinetic.threads = threads;
  o.deltas = delta_list;
  o.cube_lattice_spacing = cube_lattice_spacing;
  o.prepared_velocities = prepared_velocities;
  return o;
}

ScenarioConfig load_config(const nlohmann::json& overrides) {
  if (!overrides.is_object()) throw ConfigError("config must be a JSON object");
  nlohmann::json raw = default_config();
  for (const auto& [key, value] : overrides.items()) {
    if (!raw.contains(key)) throw ConfigError("unknown config key: " + key);
    raw[key] = value;
  }

  ScenarioConfig c;
  c.sim = build_params(raw);
  c.init = build_initial_data(raw);
  try {
    c.push_scheme = parse_push_scheme(typed<std::string>(raw, "push_scheme",
                                                         &nlohmann::json::is_string, "a string"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.picard_damping = typed<double>(raw, "picard_damping", &nlohmann::json::is_number, "a number");
  if (!(c.picard_damping > 0.0 && c.picard_damping <= 1.0))
    throw ConfigError("picard_damping must lie in (0, 1]");
  c.dealias = typed<bool>(raw, "dealias", &nlohmann::json::is_boolean, "a boolean");
  c.prepared_velocities =
      typed<bool>(raw, "prepared_velocities", &nlohmann::json::is_boolean, "a boolean");
  c.threads = typed<int>(raw, "threads", &nlohmann::json::is_number_integer, "an integer");
  if (c.threads < 1) throw ConfigError("threads must be at least 1");
  c.snapshot_stride =
      typed<int>(raw, "snapshot_stride", &nlohmann::json::is_number_integer, "an integer");
  if (c.snapshot_stride < 0) throw ConfigError("snapshot_stride must be nonnegative");

  c.delta_list = number_list(raw, "delta_list");
  for (double d : c.delta_list)
    if (!(d >= 2.0 * c.sim.cell_size()))
      throw ConfigError("delta_list entries must be at least 2h");
  c.cube_lattice_spacing =
      typed<double>(raw, "cube_lattice_spacing", &nlohmann::json::is_number, "a number");
  if (c.cube_lattice_spacing < 0.0) throw ConfigError("cube_lattice_spacing must be nonnegative");

  c.lambda_list = number_list(raw, "lambda_list");
  for (std::size_t i = 0; i < c.lambda_list.size(); ++i) {
    if (!(c.lambda_list[i] > 0.0)) throw ConfigError("lambda_list entries must be positive");
    if (i > 0 && !(c.lambda_list[i] > c.lambda_list[i - 1]))
      throw ConfigError("lambda_list must be strictly increasing");
  }
  c.u_error_times = number_list(raw, "u_error_times");
  for (double t : c.u_error_times)
    if (!(t >= 0.0 && t <= c.sim.t_final)) throw ConfigError("u_error_times must lie in [0, t_final]");
  c.output_dir = typed<std::string>(raw, "output_dir", &nlohmann::json::is_string, "a string");
  c.resolved = std::move(raw);
  return c;
}

nlohmann::json read_config_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("malformed config " + file.string() + ": " + e.what());
  }
}

}  // namespace vstokes::cli
