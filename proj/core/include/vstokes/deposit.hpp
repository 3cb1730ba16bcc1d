#pragma once

#include <array>
#include <span>

#include "vstokes/ensemble.hpp"
#include "vstokes/field.hpp"

namespace vstokes {

/// Cloud-in-cell (trilinear) stencil of a point on the cell-centred grid:
/// the 8 surrounding cell centres and their weights. The weights sum to one.
struct CicStencil {
  std::array<std::size_t, 8> index;
  std::array<double, 8> weight;
};

CicStencil cic_stencil(const Vec3& x, int n, double box_length);

/// rho = sum_i w_i K(x - x_i) / h^3, so h^3 * sum(rho) = sum(w_i).
ScalarField deposit_density(const PhaseEnsemble& e, int n, int threads = 1);

/// j = sum_i w_i v_i K(x - x_i) / h^3.
VectorField deposit_current(const PhaseEnsemble& e, int n, int threads = 1);

struct Moments {
  ScalarField rho;
  VectorField j;
};

/// Density and current in one pass over the particles.
Moments deposit_moments(const PhaseEnsemble& e, int n, int threads = 1);

/// Deposits arbitrary weighted points (used for tracer ensembles).
ScalarField deposit_points(std::span<const Vec3> positions, std::span<const double> weights, int n,
                           double box_length, int threads = 1);

/// Particle-grid coupling with the stencils frozen at the current
/// positions. apply(u) = sum_i w_i u(x_i) K(x - x_i) / h^3 is the particle
/// quadrature of rho u; since deposition is the adjoint of interpolation
/// this operator is symmetric and positive semi-definite, and
/// h^3 sum u . apply(u) = sum_i w_i |u(x_i)|^2.
class ParticleCoupling {
 public:
  ParticleCoupling(const PhaseEnsemble& e, int n, int threads = 1);

  VectorField apply(const VectorField& u) const;
  /// sum_i w_i |u(x_i)|^2.
  double weighted_square(const VectorField& u) const;

 private:
  int n_;
  double box_length_;
  int threads_;
  std::vector<CicStencil> stencils_;
  std::vector<double> weights_;
};

/// rho_floor = 1e-12 * max(rho).
inline constexpr double kDensityFloorFraction = 1e-12;

/// V = j / rho where rho exceeds the floor, zero elsewhere.
VectorField mean_velocity(const ScalarField& rho, const VectorField& j);

/// Trilinear interpolation with the deposition kernel. The position is
/// wrapped into the box first.
Vec3 interpolate(const VectorField& f, const Vec3& x);
double interpolate(const ScalarField& f, const Vec3& x);

}  // namespace vstokes
