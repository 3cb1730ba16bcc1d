#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vstokes/ensemble.hpp"
#include "vstokes/initial_data.hpp"
#include "vstokes/params.hpp"
#include "vstokes/push.hpp"
#include "vstokes/stokes.hpp"

namespace vstokes {

struct KineticOptions {
  PushScheme scheme = PushScheme::exponential_midpoint;
  double damping = 0.7;
  StokesOptions stokes{};
  int threads = 1;
};

/// Grid state of the coupled system at one time level.
struct KineticFields {
  ScalarField rho;
  VectorField j;
  VectorField vbar;
  VectorField u;
  BrinkmanSolveReport report;
};

/// Brinkman failure during a run, tagged with the step index.
class SolverStepError : public std::runtime_error {
 public:
  SolverStepError(int step, const BrinkmanSolveReport& r);
  int step() const { return step_; }
  const BrinkmanSolveReport& report() const { return report_; }

 private:
  int step_;
  BrinkmanSolveReport report_;
};

/// Particle-in-cell time stepper for the Vlasov-Stokes system. Each step:
/// push with the current u, then deposit rho and j, form V, and solve the
/// Brinkman problem warm-started from the previous u. The drag acts on the
/// particles, -Lap u + grad p = j - sum_i w_i u(x_i) K(x - x_i) / h^3, so the
/// momentum the fluid receives is exactly what the particles lose.
class VlasovStokesSolver {
 public:
  VlasovStokesSolver(const SimParams& params, PhaseEnsemble initial, KineticOptions opts = {});

  double time() const { return time_; }
  int step_index() const { return step_; }
  const SimParams& params() const { return params_; }
  const KineticOptions& options() const { return opts_; }
  const PhaseEnsemble& ensemble() const { return ensemble_; }
  const KineticFields& fields() const { return fields_; }

  void advance();

 private:
  void update_fields();

  SimParams params_;
  KineticOptions opts_;
  PhaseEnsemble ensemble_;
  KineticFields fields_;
  double time_ = 0.0;
  int step_ = 0;
};

/// Per-step scalars of a kinetic run.
struct KineticSample {
  double t;
  double mass;
  double kinetic_energy;
  double velocity_spread;
  double support_radius;
  int brinkman_iterations;
};

struct KineticFrame {
  double t;
  int step;
  PhaseEnsemble ensemble;
  KineticFields fields;
};

struct KineticHistory {
  std::vector<KineticSample> samples;
  std::vector<KineticFrame> frames;
};

/// Runs the coupled system from sampled initial data to params.t_final,
/// keeping a frame every `stride` steps (and the last one).
KineticHistory run_vlasov_stokes(const SimParams& params, const InitialData& init,
                                 const KineticOptions& opts = {}, int stride = 0);

}  // namespace vstokes
