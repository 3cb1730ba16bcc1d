#pragma once

#include <stdexcept>
#include <vector>

#include "vstokes/initial_data.hpp"
#include "vstokes/params.hpp"
#include "vstokes/stokes.hpp"
#include "vstokes/tracers.hpp"

namespace vstokes {

/// Raised when the tracer cloud comes within L/4 of its periodic images.
class PeriodicImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LimitFields {
  ScalarField rho_star;
  VectorField u_star;
};

/// Time stepper for the inertialess transport-Stokes system.
class LimitSolver {
 public:
  LimitSolver(const SimParams& params, TracerEnsemble tracers, StokesOptions opts = {},
              int threads = 1);

  double time() const { return time_; }
  int step_index() const { return step_; }
  const TracerEnsemble& tracers() const { return tracers_; }
  const LimitFields& fields() const { return fields_; }

  void advance();

 private:
  void update_fields();

  SimParams params_;
  StokesOptions opts_;
  int threads_;
  TracerEnsemble tracers_;
  LimitFields fields_;
  double time_ = 0.0;
  int step_ = 0;
};

/// Throws PeriodicImageError if the cloud extent exceeds 3L/4 on some axis.
void check_image_separation(std::span<const Vec3> unwrapped, double box_length);

struct LimitSample {
  double t;
  double mass;
  double rho_linf;
};

struct LimitFrame {
  double t;
  int step;
  LimitFields fields;
};

struct LimitHistory {
  std::vector<LimitSample> samples;
  std::vector<LimitFrame> frames;
};

/// Runs the limit system with tracers seeded at the kinetic ensemble's
/// initial positions (same seed, same initial data).
LimitHistory run_limit(const SimParams& params, const InitialData& init, const StokesOptions& opts = {},
                       int stride = 0);

}  // namespace vstokes
