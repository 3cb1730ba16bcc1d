#include "vstokes/push.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "vstokes/parallel.hpp"
#include "vstokes/summation.hpp"

namespace vstokes {

PushScheme parse_push_scheme(std::string_view name) {
  if (name == "exponential_euler") return PushScheme::exponential_euler;
  if (name == "exponential_midpoint") return PushScheme::exponential_midpoint;
  throw std::invalid_argument("unknown push scheme: " + std::string(name));
}

std::string_view push_scheme_name(PushScheme s) {
  return s == PushScheme::exponential_euler ? "exponential_euler" : "exponential_midpoint";
}

DragFactors drag_factors(double lambda, double dt) {
  const double x = lambda * dt;
  const double decay = x > 700.0 ? 0.0 : std::exp(-x);
  const double relax = x > 700.0 ? 1.0 : -std::expm1(-x);
  return {decay, relax, relax / lambda};
}

void push_in_place(PhaseEnsemble& e, const VectorField& u, double lambda, const Vec3& g, double dt,
                   PushScheme scheme, int threads) {
  auto sampler = [&u](const Vec3& x) { return interpolate(u, x); };
  auto xs = e.unwrapped_positions();
  auto vs = e.velocities();
  parallel_chunks(e.size(), threads, [&](int, std::size_t b, std::size_t end) {
    for (std::size_t i = b; i < end; ++i) {
      ParticleState s = advance_particle({xs[i], vs[i]}, sampler, lambda, g, dt, scheme);
      e.set_state(i, s.x, s.v);
    }
  });
}

PhaseEnsemble push(PhaseEnsemble e, const VectorField& u, double lambda, const Vec3& g, double dt,
                   PushScheme scheme, int threads) {
  push_in_place(e, u, lambda, g, dt, scheme, threads);
  return e;
}

double velocity_spread(const PhaseEnsemble& e, const VectorField& u, const Vec3& g) {
  double m = 0.0;
  auto xs = e.positions();
  auto vs = e.velocities();
  for (std::size_t i = 0; i < e.size(); ++i)
    m = std::max(m, (vs[i] - g - interpolate(u, xs[i])).squaredNorm());
  return std::sqrt(m);
}

double support_radius(const PhaseEnsemble& e) {
  if (e.empty()) return 0.0;
  auto xs = e.unwrapped_positions();
  auto ws = e.weights();
  std::array<CompensatedSum, 3> c;
  CompensatedSum wsum;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int a = 0; a < 3; ++a) c[a].add(ws[i] * xs[i][a]);
    wsum.add(ws[i]);
  }
  const Vec3 xc{c[0].value() / wsum.value(), c[1].value() / wsum.value(),
                c[2].value() / wsum.value()};
  auto vs = e.velocities();
  double m = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    m = std::max(m, (xs[i] - xc).squaredNorm() + vs[i].squaredNorm());
  return std::sqrt(m);
}

double phase_volume_factor(const Vec3& u_uniform, double lambda, double dt) {
  // The step is affine in (x, v) for a uniform field, so unit central
  // differences recover the Jacobian up to rounding.
  auto sampler = [&u_uniform](const Vec3&) { return u_uniform; };
  const Vec3 g{0.0, 0.0, -1.0};
  const double eps = 1.0;
  Eigen::Matrix<double, 6, 6> jac;
  for (int c = 0; c < 6; ++c) {
    ParticleState p{Vec3::Zero(), Vec3::Zero()}, m{Vec3::Zero(), Vec3::Zero()};
    (c < 3 ? p.x : p.v)[c % 3] = eps;
    (c < 3 ? m.x : m.v)[c % 3] = -eps;
    auto sp = advance_particle(p, sampler, lambda, g, dt, PushScheme::exponential_midpoint);
    auto sm = advance_particle(m, sampler, lambda, g, dt, PushScheme::exponential_midpoint);
    for (int r = 0; r < 3; ++r) {
      jac(r, c) = (sp.x[r] - sm.x[r]) / (2 * eps);
      jac(r + 3, c) = (sp.v[r] - sm.v[r]) / (2 * eps);
    }
  }
  return jac.determinant();
}

void prepare_velocities(PhaseEnsemble& e, const VectorField& u, const Vec3& g) {
  auto xs = e.positions();
  for (std::size_t i = 0; i < e.size(); ++i) e.set_velocity(i, g + interpolate(u, xs[i]));
}

}  // namespace vstokes
