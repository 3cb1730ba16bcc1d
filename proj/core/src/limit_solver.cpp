#include "vstokes/limit_solver.hpp"

#include <string>

#include "vstokes/deposit.hpp"

namespace vstokes {

void check_image_separation(std::span<const Vec3> unwrapped, double box_length) {
  const double extent = max_axis_extent(unwrapped);
  if (extent > 0.75 * box_length)
    throw PeriodicImageError("tracer cloud extent " + std::to_string(extent) +
                             " leaves less than L/4 to its periodic images");
}

LimitSolver::LimitSolver(const SimParams& params, TracerEnsemble tracers, StokesOptions opts,
                         int threads)
    : params_(params), opts_(opts), threads_(threads), tracers_(std::move(tracers)) {
  if (tracers_.box_length() != params_.box_length)
    throw std::invalid_argument("tracer box length differs from params");
  check_image_separation(tracers_.unwrapped_positions(), params_.box_length);
  update_fields();
}

void LimitSolver::update_fields() {
  fields_.rho_star = deposit_points(tracers_.positions(), tracers_.weights(), params_.grid_n,
                                    params_.box_length, threads_);
  fields_.u_star = solve_limit_fluid(fields_.rho_star, params_.gravity, opts_);
}

void LimitSolver::advance() {
  advect_in_place(tracers_, fields_.u_star, params_.gravity, params_.dt, threads_);
  ++step_;
  time_ = step_ * params_.dt;
  check_image_separation(tracers_.unwrapped_positions(), params_.box_length);
  update_fields();
}

LimitHistory run_limit(const SimParams& params, const InitialData& init, const StokesOptions& opts,
                       int stride) {
  auto e = sample_ensemble(init, params.n_particles, params.seed, params.box_length);
  LimitSolver solver(params, TracerEnsemble::from_ensemble(e, init), opts);
  LimitHistory h;
  const int steps = params.n_steps();
  for (int step = 0;; ++step) {
    const auto& f = solver.fields();
    h.samples.push_back({solver.time(), f.rho_star.sum() * f.rho_star.cell_volume(), f.rho_star.max()});
    if (step == steps || (stride > 0 && step % stride == 0))
      h.frames.push_back({solver.time(), step, f});
    if (step == steps) break;
    solver.advance();
  }
  return h;
}

}  // namespace vstokes
