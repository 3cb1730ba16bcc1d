#pragma once

#include <functional>
#include <vector>

#include "vstokes/initial_data.hpp"
#include "vstokes/limit_solver.hpp"
#include "vstokes/params.hpp"
#include "vstokes/record.hpp"
#include "vstokes/vlasov_stokes.hpp"

namespace vstokes {

struct ScenarioOptions {
  KineticOptions kinetic{};
  /// Cube sides for d_lambda_delta; each must be >= 2h.
  std::vector<double> deltas{};
  /// Corner lattice spacing for d_lambda_delta; 0 selects h/2.
  double cube_lattice_spacing = 0.0;
  /// Start the particles at v = g + u*(0, x) (no initial boundary layer).
  bool prepared_velocities = false;
};

/// Everything available after the diagnostics of one time level.
struct ScenarioStep {
  const VlasovStokesSolver& kinetic;
  const LimitSolver& limit;
  const VectorField& u_tilde;
  const DiagnosticsRecord& record;
};

using ScenarioObserver = std::function<void(const ScenarioStep&)>;

/// Runs the kinetic system and the limit system in lock step on the same
/// sampled initial data (tracers start at the particles' initial
/// positions) and records diagnostics at every time level.
std::vector<DiagnosticsRecord> run_scenario(const SimParams& params, const InitialData& init,
                                            const ScenarioOptions& opts,
                                            const ScenarioObserver& observer = {});

}  // namespace vstokes
