#pragma once

#include "vstokes/ensemble.hpp"
#include "vstokes/field.hpp"

namespace vstokes {

/// E = sum_i w_i |v_i|^2.
double kinetic_energy(const PhaseEnsemble& e);

/// The terms of the fluid energy balance
/// ||grad u||^2 + ||u||^2_{L^2_rho} = (u, j) <= ||V||^2_{L^2_rho} <= E.
struct FluidEnergyTerms {
  double grad_u_sq;
  double u_rho_sq;
  double u_dot_j;
  double vbar_rho_sq;
};

FluidEnergyTerms fluid_energy_terms(const VectorField& u, const TensorField& grad_u,
                                    const ScalarField& rho, const VectorField& vbar);

/// Terms for the particle form of the drag used by the coupled solver:
/// ||u||^2_{L^2_rho} is the particle quadrature sum_i w_i |u(x_i)|^2 and
/// (u, j) = h^3 sum u . j with the deposited current.
FluidEnergyTerms fluid_energy_terms(const VectorField& u, const TensorField& grad_u,
                                    const PhaseEnsemble& e, const ScalarField& rho,
                                    const VectorField& j, const VectorField& vbar);

/// |(||grad u||^2 + ||u||^2_rho) - (u, j)| / max(|(u, j)|, eps).
double fluid_identity_residual(const VectorField& u, const ScalarField& rho, const VectorField& j);
double fluid_identity_residual(const FluidEnergyTerms& t);

/// Right-hand side of the particle energy balance
/// dE/dt = 2 lambda (g . sum w v - sum w |u(x) - v|^2 - ||grad u||^2).
double energy_rate(const PhaseEnsemble& e, const VectorField& u, double grad_u_sq, double lambda,
                   const Vec3& g);

struct EnergySample {
  double t;
  double energy;
  double rate;
};

struct EnergyResidual {
  double raw;
  /// raw / (2 lambda E), E averaged over the interval.
  double normalized;
};

/// r = (E1 - E0) / (t1 - t0) - (rate0 + rate1) / 2.
EnergyResidual energy_identity_residual(const EnergySample& prev, const EnergySample& next,
                                        double lambda);

}  // namespace vstokes
