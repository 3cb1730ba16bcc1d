#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vstokes/initial_data.hpp"
#include "vstokes/params.hpp"
#include "vstokes/push.hpp"
#include "vstokes/scenario.hpp"

namespace vstokes::cli {

/// Everything a run, sweep or verify needs. Built from a flat JSON object
/// layered over default_config(); `resolved` is the merged object that gets
/// written next to every output.
struct ScenarioConfig {
  SimParams sim;
  InitialData init;
  PushScheme push_scheme = PushScheme::exponential_midpoint;
  double picard_damping = 0.7;
  bool dealias = false;
  int threads = 1;
  bool prepared_velocities = false;
  int snapshot_stride = 50;
  std::vector<double> delta_list;
  double cube_lattice_spacing = 0.0;
  std::vector<double> lambda_list;
  std::vector<double> u_error_times;
  std::string output_dir;
  nlohmann::json resolved;

  ScenarioOptions scenario_options() const;
};

nlohmann::json default_config();

/// Merges `overrides` over the defaults and validates. Unknown keys and
/// invalid values raise ConfigError.
ScenarioConfig load_config(const nlohmann::json& overrides);
/// Reads a JSON file; a missing or malformed file raises ConfigError.
nlohmann::json read_config_file(const std::filesystem::path& file);

}  // namespace vstokes::cli
