#include "vstokes/vlasov_stokes.hpp"

#include <string>

#include "vstokes/deposit.hpp"
#include "vstokes/energy.hpp"

namespace vstokes {

SolverStepError::SolverStepError(int step, const BrinkmanSolveReport& r)
    : std::runtime_error("Brinkman solve failed at step " + std::to_string(step) + " after " +
                         std::to_string(r.iterations) + " iterations (residual " +
                         std::to_string(r.final_residual) + ")"),
      step_(step),
      report_(r) {}

VlasovStokesSolver::VlasovStokesSolver(const SimParams& params, PhaseEnsemble initial,
                                       KineticOptions opts)
    : params_(params), opts_(opts), ensemble_(std::move(initial)) {
  if (ensemble_.box_length() != params_.box_length)
    throw std::invalid_argument("ensemble box length differs from params");
  fields_.u = VectorField(params_.grid_n, params_.box_length);
  update_fields();
}

void VlasovStokesSolver::update_fields() {
  Moments m = deposit_moments(ensemble_, params_.grid_n, opts_.threads);
  fields_.rho = std::move(m.rho);
  fields_.j = std::move(m.j);
  fields_.vbar = mean_velocity(fields_.rho, fields_.j);
  BrinkmanOptions bo{params_.brinkman_tol, params_.brinkman_max_iter, opts_.damping, opts_.stokes};
  try {
    ParticleCoupling coupling(ensemble_, params_.grid_n, opts_.threads);
    auto drag = [&coupling](const VectorField& u) { return coupling.apply(u); };
    BrinkmanResult r = solve_brinkman(drag, fields_.j, fields_.u, bo);
    fields_.u = std::move(r.u);
    fields_.report = r.report;
  } catch (const BrinkmanNonConvergence& e) {
    throw SolverStepError(step_, e.report());
  }
}

void VlasovStokesSolver::advance() {
  push_in_place(ensemble_, fields_.u, params_.lambda, params_.gravity, params_.dt, opts_.scheme,
                opts_.threads);
  ++step_;
  time_ = step_ * params_.dt;
  update_fields();
}

namespace {

KineticSample sample_of(const VlasovStokesSolver& s) {
  const auto& f = s.fields();
  return {s.time(),
          s.ensemble().total_weight(),
          kinetic_energy(s.ensemble()),
          velocity_spread(s.ensemble(), f.u, s.params().gravity),
          support_radius(s.ensemble()),
          f.report.iterations};
}

}  // namespace

KineticHistory run_vlasov_stokes(const SimParams& params, const InitialData& init,
                                 const KineticOptions& opts, int stride) {
  VlasovStokesSolver solver(
      params, sample_ensemble(init, params.n_particles, params.seed, params.box_length), opts);
  KineticHistory h;
  const int steps = params.n_steps();
  auto keep = [&](int step) {
    return step == steps || (stride > 0 && step % stride == 0);
  };
  for (int step = 0;; ++step) {
    h.samples.push_back(sample_of(solver));
    if (keep(step))
      h.frames.push_back({solver.time(), step, solver.ensemble(), solver.fields()});
    if (step == steps) break;
    solver.advance();
  }
  return h;
}

}  // namespace vstokes
