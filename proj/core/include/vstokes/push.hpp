#pragma once

#include <cmath>
#include <string_view>

#include "vstokes/deposit.hpp"
#include "vstokes/ensemble.hpp"
#include "vstokes/field.hpp"

namespace vstokes {

enum class PushScheme { exponential_euler, exponential_midpoint };

PushScheme parse_push_scheme(std::string_view name);
std::string_view push_scheme_name(PushScheme s);

/// Coefficients of the exact solution of V' = lambda (a - V) over a step:
/// decay = e^{-lambda dt}, relax = 1 - decay, drift = relax / lambda.
/// decay is flushed to zero for lambda dt > 700; relax uses expm1.
struct DragFactors {
  double decay;
  double relax;
  double drift;
};

DragFactors drag_factors(double lambda, double dt);

struct ParticleState {
  Vec3 x;
  Vec3 v;
};

/// Exact update for a frozen acceleration target a = g + u:
/// V' = e v + (1 - e) a, X' = x + a dt + (v - a)(1 - e) / lambda.
inline ParticleState frozen_drag_step(const ParticleState& s, const Vec3& a, const DragFactors& f,
                                      double dt) {
  Vec3 rel = s.v - a;
  return {s.x + a * dt + rel * f.drift, a + rel * f.decay};
}

/// One characteristic step of X' = V, V' = lambda (g + u(X) - V) with the
/// field frozen over the step. `velocity_at` evaluates u at a position.
/// exponential_euler uses a = g + u(x); exponential_midpoint re-evaluates a
/// at the Euler-predicted half-step position.
template <class Sampler>
ParticleState advance_particle(const ParticleState& s, Sampler&& velocity_at, double lambda,
                               const Vec3& g, double dt, PushScheme scheme) {
  Vec3 a = g + velocity_at(s.x);
  if (scheme == PushScheme::exponential_midpoint) {
    ParticleState half = frozen_drag_step(s, a, drag_factors(lambda, 0.5 * dt), 0.5 * dt);
    a = g + velocity_at(half.x);
  }
  return frozen_drag_step(s, a, drag_factors(lambda, dt), dt);
}

/// Advances every particle in place; weights are untouched.
void push_in_place(PhaseEnsemble& e, const VectorField& u, double lambda, const Vec3& g, double dt,
                   PushScheme scheme, int threads = 1);

PhaseEnsemble push(PhaseEnsemble e, const VectorField& u, double lambda, const Vec3& g, double dt,
                   PushScheme scheme, int threads = 1);

/// max_i |v_i - (g + u(x_i))|.
double velocity_spread(const PhaseEnsemble& e, const VectorField& u, const Vec3& g);

/// max_i |(x_i - x_c, v_i)| with x_c the weighted centroid of the unwrapped
/// positions.
double support_radius(const PhaseEnsemble& e);

/// Determinant of the one-step phase-space Jacobian of the push for a
/// spatially uniform field. Equals e^{-3 lambda dt}.
double phase_volume_factor(const Vec3& u_uniform, double lambda, double dt);

/// Sets v_i = g + u(x_i) for every particle (prepared initial data without
/// a boundary layer).
void prepare_velocities(PhaseEnsemble& e, const VectorField& u, const Vec3& g);

}  // namespace vstokes
