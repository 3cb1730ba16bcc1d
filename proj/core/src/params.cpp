#include "vstokes/params.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace vstokes {

int SimParams::n_steps() const { return static_cast<int>(std::llround(t_final / dt)); }

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

double number(const nlohmann::json& raw, const char* key) {
  if (!raw.contains(key)) throw ConfigError(std::string("missing field: ") + key);
  const auto& v = raw.at(key);
  if (!v.is_number()) throw ConfigError(std::string("field is not a number: ") + key);
  return v.get<double>();
}

Vec3 vec3(const nlohmann::json& raw, const char* key) {
  if (!raw.contains(key)) throw ConfigError(std::string("missing field: ") + key);
  const auto& v = raw.at(key);
  if (!v.is_array() || v.size() != 3) throw ConfigError(std::string("field is not a 3-vector: ") + key);
  Vec3 r;
  for (int a = 0; a < 3; ++a) {
    if (!v[a].is_number()) throw ConfigError(std::string("field is not a 3-vector: ") + key);
    r[a] = v[a].get<double>();
  }
  return r;
}

long integer(const nlohmann::json& raw, const char* key) {
  double x = number(raw, key);
  if (x != std::floor(x)) throw ConfigError(std::string("field is not an integer: ") + key);
  return static_cast<long>(x);
}

}  // namespace

void validate_params(const SimParams& p, double support_radius) {
  if (!(p.lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (!(p.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(p.t_final > 0.0)) throw ConfigError("t_final must be positive");
  if (!(p.box_length > 0.0)) throw ConfigError("box_length must be positive");
  if (p.grid_n < 8 || !is_power_of_two(p.grid_n))
    throw ConfigError("grid_n must be a power of two and at least 8");
  if (p.n_particles < 1) throw ConfigError("n_particles must be at least 1");
  if (!(p.brinkman_tol > 0.0)) throw ConfigError("brinkman_tol must be positive");
  if (p.brinkman_max_iter < 1) throw ConfigError("brinkman_max_iter must be at least 1");
  if (!(support_radius > 0.0)) throw ConfigError("radius_x must be positive");
  if (p.box_length < 4.0 * (2.0 * support_radius))
    throw ConfigError("box_length < 4x support diameter");
}

SimParams build_params(const nlohmann::json& raw) {
  SimParams p;
  p.lambda = number(raw, "lambda");
  p.gravity = vec3(raw, "gravity");
  p.box_length = number(raw, "box_length");
  p.grid_n = static_cast<int>(integer(raw, "grid_n"));
  long n = integer(raw, "n_particles");
  if (n < 1) throw ConfigError("n_particles must be at least 1");
  p.n_particles = static_cast<std::size_t>(n);
  p.dt = number(raw, "dt");
  p.t_final = number(raw, "t_final");
  p.brinkman_tol = number(raw, "brinkman_tol");
  p.brinkman_max_iter = static_cast<int>(integer(raw, "brinkman_max_iter"));
  long seed = integer(raw, "seed");
  if (seed < 0) throw ConfigError("seed must be nonnegative");
  p.seed = static_cast<std::uint64_t>(seed);
  validate_params(p, number(raw, "radius_x"));
  return p;
}

}  // namespace vstokes
