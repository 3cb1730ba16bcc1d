#include "vstokes/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "vstokes/deposit.hpp"
#include "vstokes/norms.hpp"
#include "vstokes/spectral.hpp"
#include "vstokes/summation.hpp"

namespace vstokes {

double kinetic_energy(const PhaseEnsemble& e) {
  CompensatedSum s;
  auto vs = e.velocities();
  auto ws = e.weights();
  for (std::size_t i = 0; i < e.size(); ++i) s.add(ws[i] * vs[i].squaredNorm());
  return s.value();
}

FluidEnergyTerms fluid_energy_terms(const VectorField& u, const TensorField& grad_u,
                                    const ScalarField& rho, const VectorField& vbar) {
  if (!u.same_grid(rho) || !vbar.same_grid(rho))
    throw std::invalid_argument("fluid_energy_terms: grids differ");
  CompensatedSum udj;
  for (std::size_t i = 0; i < u.size(); ++i) udj.add(rho[i] * u.at(i).dot(vbar.at(i)));
  const double ur = weighted_l2_norm(u, rho);
  const double vr = weighted_l2_norm(vbar, rho);
  return {gradient_l2_squared(grad_u), ur * ur, udj.value() * u.cell_volume(), vr * vr};
}

FluidEnergyTerms fluid_energy_terms(const VectorField& u, const TensorField& grad_u,
                                    const PhaseEnsemble& e, const ScalarField& rho,
                                    const VectorField& j, const VectorField& vbar) {
  if (!u.same_grid(rho) || !vbar.same_grid(rho) || !j.same_grid(rho))
    throw std::invalid_argument("fluid_energy_terms: grids differ");
  CompensatedSum uu;
  auto xs = e.positions();
  auto ws = e.weights();
  for (std::size_t i = 0; i < e.size(); ++i) uu.add(ws[i] * interpolate(u, xs[i]).squaredNorm());
  const double vr = weighted_l2_norm(vbar, rho);
  return {gradient_l2_squared(grad_u), uu.value(), inner_product(u, j), vr * vr};
}

double fluid_identity_residual(const FluidEnergyTerms& t) {
  const double denom = std::max(std::abs(t.u_dot_j), 1e-300);
  return std::abs(t.grad_u_sq + t.u_rho_sq - t.u_dot_j) / denom;
}

double fluid_identity_residual(const VectorField& u, const ScalarField& rho, const VectorField& j) {
  const double ur = weighted_l2_norm(u, rho);
  FluidEnergyTerms t{gradient_l2_squared(spectral_gradient(u)), ur * ur, inner_product(u, j), 0.0};
  return fluid_identity_residual(t);
}

double energy_rate(const PhaseEnsemble& e, const VectorField& u, double grad_u_sq, double lambda,
                   const Vec3& g) {
  CompensatedSum gv, slip;
  auto xs = e.positions();
  auto vs = e.velocities();
  auto ws = e.weights();
  for (std::size_t i = 0; i < e.size(); ++i) {
    gv.add(ws[i] * g.dot(vs[i]));
    slip.add(ws[i] * (interpolate(u, xs[i]) - vs[i]).squaredNorm());
  }
  return 2.0 * lambda * (gv.value() - slip.value() - grad_u_sq);
}

EnergyResidual energy_identity_residual(const EnergySample& prev, const EnergySample& next,
                                        double lambda) {
  const double dt = next.t - prev.t;
  if (!(dt > 0.0)) throw std::invalid_argument("energy residual: times must increase");
  const double raw = (next.energy - prev.energy) / dt - 0.5 * (prev.rate + next.rate);
  const double scale = lambda * (prev.energy + next.energy);
  return {raw, scale > 0.0 ? raw / scale : raw};
}

}  // namespace vstokes
