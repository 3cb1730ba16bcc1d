#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vstokes/types.hpp"

namespace vstokes {

/// Raised when a configuration violates a parameter invariant. The message
/// names the violated invariant.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nondimensional simulation parameters.
struct SimParams {
  double lambda = 50.0;
  Vec3 gravity{0.0, 0.0, -1.0};
  double box_length = 8.0;
  int grid_n = 64;
  std::size_t n_particles = 100000;
  double dt = 1.0 / 200.0;
  double t_final = 1.0;
  double brinkman_tol = 1e-9;
  int brinkman_max_iter = 200;
  std::uint64_t seed = 12345;

  double cell_size() const { return box_length / grid_n; }
  /// Number of steps so that the final time is within dt of t_final.
  int n_steps() const;
};

bool is_power_of_two(long n);

/// Validates and assembles SimParams from a flat raw configuration. Every
/// field of SimParams plus `radius_x` (the spatial support radius of the
/// initial data) must be present.
SimParams build_params(const nlohmann::json& raw);

/// Checks the SimParams invariants against a given spatial support radius.
void validate_params(const SimParams& p, double support_radius);

}  // namespace vstokes
