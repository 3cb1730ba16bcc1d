#include "vstokes/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "vstokes/deposit.hpp"
#include "vstokes/energy.hpp"
#include "vstokes/metrics.hpp"
#include "vstokes/norms.hpp"
#include "vstokes/spectral.hpp"

namespace vstokes {

namespace {

TensorField difference(const TensorField& a, const TensorField& b) {
  TensorField d = a;
  for (int i = 0; i < 3; ++i) d[i] -= b[i];
  return d;
}

double trace_linf(const TensorField& g) {
  double m = 0.0;
  for (std::size_t i = 0; i < g[0].size(); ++i)
    m = std::max(m, std::abs(g[0][0][i] + g[1][1][i] + g[2][2][i]));
  return m;
}

// max |div| relative to max |grad|, so that the check is scale free.
double relative_trace(const TensorField& g) {
  return trace_linf(g) / std::max(gradient_linf(g), 1e-300);
}

}  // namespace

std::vector<DiagnosticsRecord> run_scenario(const SimParams& params, const InitialData& init,
                                            const ScenarioOptions& opts,
                                            const ScenarioObserver& observer) {
  PhaseEnsemble particles = sample_ensemble(init, params.n_particles, params.seed, params.box_length);
  LimitSolver limit(params, TracerEnsemble::from_ensemble(particles, init), opts.kinetic.stokes,
                    opts.kinetic.threads);
  if (opts.prepared_velocities) prepare_velocities(particles, limit.fields().u_star, params.gravity);
  VlasovStokesSolver kinetic(params, std::move(particles), opts.kinetic);

  const double lambda = params.lambda;
  const Vec3& g = params.gravity;
  const int steps = params.n_steps();
  std::vector<DiagnosticsRecord> records;
  records.reserve(steps + 1);
  EnergySample prev_energy{};
  double eta = 0.0;

  for (int step = 0;; ++step) {
    const auto& kf = kinetic.fields();
    const auto& lf = limit.fields();
    const auto& ens = kinetic.ensemble();
    VectorField u_tilde = intermediate_velocity(kf.rho, g, opts.kinetic.stokes);
    TensorField grad_u = spectral_gradient(kf.u);
    TensorField grad_star = spectral_gradient(lf.u_star);
    TensorField grad_tilde = spectral_gradient(u_tilde);
    FluidEnergyTerms terms = fluid_energy_terms(kf.u, grad_u, ens, kf.rho, kf.j, kf.vbar);

    DiagnosticsRecord r;
    r.t = kinetic.time();
    r.mass = kf.rho.sum() * kf.rho.cell_volume();
    r.E = kinetic_energy(ens);
    r.grad_u_L2 = std::sqrt(terms.grad_u_sq);
    r.u_Linf = field_norm(kf.u, Norm::Linf);
    r.grad_u_Linf = gradient_linf(grad_u);
    r.u_W1inf = r.u_Linf + r.grad_u_Linf;
    r.rho_Linf = kf.rho.max();
    r.velocity_spread = velocity_spread(ens, kf.u, g);
    r.support_radius = support_radius(ens);
    r.fluid_identity_residual = fluid_identity_residual(terms);
    r.u_dot_j = terms.u_dot_j;
    r.u_rho_sq = terms.u_rho_sq;
    r.vbar_rho_sq = terms.vbar_rho_sq;

    EnergySample now{r.t, r.E, energy_rate(ens, kf.u, terms.grad_u_sq, lambda, g)};
    if (step > 0) {
      EnergyResidual er = energy_identity_residual(prev_energy, now, lambda);
      r.energy_identity_residual = er.normalized;
      r.energy_identity_residual_raw = er.raw;
    }
    prev_energy = now;

    for (double delta : opts.deltas)
      r.d_lambda_delta.push_back(d_lambda_delta(kf.rho, lf.rho_star, delta, opts.cube_lattice_spacing));
    r.err_u_vs_ustar_W1inf =
        field_norm(kf.u - lf.u_star, Norm::Linf) + gradient_linf(difference(grad_u, grad_star));
    r.err_u_vs_utilde_W1inf =
        field_norm(kf.u - u_tilde, Norm::Linf) + gradient_linf(difference(grad_u, grad_tilde));
    ScalarField drho = kf.rho - lf.rho_star;
    r.err_rho_Linf = field_norm(drho, Norm::Linf);
    r.err_rho_holder = holder_quotient(drho, 0.5);
    eta = std::max(eta, trajectory_distance(ens.unwrapped_positions(),
                                            limit.tracers().unwrapped_positions(),
                                            params.box_length));
    r.eta_traj = eta;
    r.mass_star = lf.rho_star.sum() * lf.rho_star.cell_volume();
    r.div_u = relative_trace(grad_u);
    r.div_u_star = relative_trace(grad_star);
    r.div_u_tilde = relative_trace(grad_tilde);
    r.brinkman_iterations = kf.report.iterations;

    records.push_back(std::move(r));
    if (observer) observer({kinetic, limit, u_tilde, records.back()});
    if (step == steps) break;
    kinetic.advance();
    limit.advance();
  }
  return records;
}

}  // namespace vstokes
