#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "vstokes/deposit.hpp"
#include "vstokes/energy.hpp"
#include "vstokes/metrics.hpp"
#include "vstokes/norms.hpp"
#include "vstokes/ode_lemma.hpp"
#include "vstokes/push.hpp"
#include "vstokes/record.hpp"
#include "vstokes/tracers.hpp"

using namespace vstokes;

namespace {

const Vec3 kG(0.0, 0.0, -1.0);

ScalarField random_field(int n, unsigned seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, scale);
  ScalarField f(n, 8.0);
  for (auto& v : f.values()) v = u(rng);
  return f;
}

// Exact single-particle relaxation in a zero fluid: v(t) = g + (v0 - g) e^{-lambda t}.
double exact_energy(const Vec3& v0, double lambda, double t) {
  return (kG + (v0 - kG) * std::exp(-lambda * t)).squaredNorm();
}

}  // namespace

TEST(Energy, KineticEnergyExamples) {
  EXPECT_EQ(kinetic_energy(PhaseEnsemble(8.0, {Vec3(1, 1, 1)}, {Vec3(3, 0, 0)}, {1.0})), 9.0);
  EXPECT_EQ(kinetic_energy(PhaseEnsemble(8.0, {Vec3(1, 1, 1), Vec3(2, 2, 2)}, {Vec3::Zero(), Vec3::Zero()},
                                         {0.5, 0.5})),
            0.0);
}

TEST(Energy, RateOfSingleParticle) {
  // g . v = 0.5, |u - v|^2 = 0.25, no fluid gradient: rate = 2 lambda 0.25.
  PhaseEnsemble e(8.0, {Vec3(4, 4, 4)}, {Vec3(0, 0, -0.5)}, {1.0});
  EXPECT_DOUBLE_EQ(energy_rate(e, VectorField(8, 8.0), 0.0, 10.0, kG), 5.0);
  EXPECT_DOUBLE_EQ(energy_rate(e, VectorField(8, 8.0), 0.1, 10.0, kG), 3.0);
  PhaseEnsemble still(8.0, {Vec3(4, 4, 4)}, {Vec3::Zero()}, {1.0});
  EXPECT_EQ(energy_rate(still, VectorField(8, 8.0), 0.0, 10.0, Vec3::Zero()), 0.0);
}

TEST(Energy, ResidualOfManufacturedRelaxation) {
  const double lambda = 4.0;
  const Vec3 v0(1.0, 0.0, 0.5);
  auto sample = [&](double t) {
    const Vec3 v = kG + (v0 - kG) * std::exp(-lambda * t);
    PhaseEnsemble e(8.0, {Vec3(4, 4, 4)}, {v}, {1.0});
    return EnergySample{t, exact_energy(v0, lambda, t), energy_rate(e, VectorField(8, 8.0), 0.0, lambda, kG)};
  };
  // Hand-computed: dE/dt = 2 lambda v . (g - v) is exactly the rate, so the
  // residual is the trapezoid error of integrating it.
  auto residual = [&](double dt) {
    const EnergySample a = sample(0.1), b = sample(0.1 + dt);
    const double exact_mean = (b.energy - a.energy) / dt;
    const EnergyResidual r = energy_identity_residual(a, b, lambda);
    EXPECT_NEAR(r.raw, exact_mean - 0.5 * (a.rate + b.rate), 1e-10);
    EXPECT_NEAR(r.normalized, r.raw / (lambda * (a.energy + b.energy)), 1e-15);
    return std::abs(r.raw);
  };
  const double r1 = residual(0.005), r2 = residual(0.0025);
  EXPECT_NEAR(r1 / r2, 4.0, 0.1);
  EXPECT_THROW(energy_identity_residual(sample(0.1), sample(0.1), lambda), std::invalid_argument);
}

TEST(Energy, StationaryStateHasZeroResidual) {
  PhaseEnsemble e(8.0, {Vec3(4, 4, 4)}, {Vec3::Zero()}, {1.0});
  EnergySample a{0.0, 0.0, energy_rate(e, VectorField(8, 8.0), 0.0, 5.0, Vec3::Zero())};
  EnergySample b{0.1, 0.0, a.rate};
  EXPECT_EQ(energy_identity_residual(a, b, 5.0).raw, 0.0);
  EXPECT_EQ(energy_identity_residual(a, b, 5.0).normalized, 0.0);
}

TEST(Energy, FluidTermsOfGridFields) {
  ScalarField rho(8, 8.0, 2.0);
  VectorField u(8, 8.0), v(8, 8.0);
  u.fill(Vec3(1, 0, 0));
  v.fill(Vec3(1, 1, 0));
  TensorField zero{VectorField(8, 8.0), VectorField(8, 8.0), VectorField(8, 8.0)};
  auto t = fluid_energy_terms(u, zero, rho, v);
  EXPECT_DOUBLE_EQ(t.u_rho_sq, 1024.0);
  EXPECT_DOUBLE_EQ(t.u_dot_j, 1024.0);
  EXPECT_DOUBLE_EQ(t.vbar_rho_sq, 2048.0);
  EXPECT_EQ(t.grad_u_sq, 0.0);
  EXPECT_EQ(fluid_identity_residual(t), 0.0);
}

TEST(Metrics, DLambdaDeltaBasics) {
  ScalarField a = random_field(16, 1), b = random_field(16, 2);
  EXPECT_EQ(d_lambda_delta(a, a, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(d_lambda_delta(a, b, 1.0), d_lambda_delta(b, a, 1.0));
  ScalarField shifted = a;
  for (auto& v : shifted.values()) v += 0.25;
  EXPECT_NEAR(d_lambda_delta(shifted, a, 1.3), 0.25, 1e-14);
  ScalarField c = random_field(16, 3);
  EXPECT_LE(d_lambda_delta(a, c, 1.0), d_lambda_delta(a, b, 1.0) + d_lambda_delta(b, c, 1.0) + 1e-15);
  EXPECT_LE(d_lambda_delta(a, b, 1.0), field_norm(a - b, Norm::Linf));
  EXPECT_THROW(d_lambda_delta(a, b, 0.5), std::invalid_argument);
}

TEST(Metrics, DLambdaDeltaOfDisplacedPeak) {
  // A unit mass moved by one cell: a cube holding both cells sees no
  // difference, but a cube holding only one of them does.
  ScalarField a(16, 8.0), b(16, 8.0);
  a(8, 8, 8) = 8.0;
  b(9, 8, 8) = 8.0;
  EXPECT_NEAR(d_lambda_delta(a, b, 1.0, 0.5), 1.0, 1e-15);
  // With side 1.5 every cube containing one cell can also contain the other
  // on the h/2 lattice, but the best cube still holds only one of them.
  EXPECT_NEAR(d_lambda_delta(a, b, 1.5), 8.0 / 27.0, 1e-15);
}

TEST(Metrics, TrajectoryDistanceUsesMinimalImage) {
  std::vector<Vec3> a{Vec3(0.1, 0, 0), Vec3(2, 2, 2)};
  std::vector<Vec3> b{Vec3(7.9, 0, 0), Vec3(2, 2.5, 2)};
  EXPECT_NEAR(trajectory_distance(a, b, 8.0), 0.5, 1e-15);
  std::vector<Vec3> c{Vec3(0.1, 0, 0)};
  EXPECT_THROW(trajectory_distance(a, c, 8.0), std::invalid_argument);
}

TEST(Metrics, PreparedParticleFollowsTracerExactly) {
  // u = u* = 0 and v = g: the particle and the tracer both move by g dt.
  PhaseEnsemble e(8.0, {Vec3(4, 4, 4), Vec3(1, 7, 0.2)}, {kG, kG}, {0.5, 0.5});
  TracerEnsemble tr(8.0, {Vec3(4, 4, 4), Vec3(1, 7, 0.2)}, {1, 1}, {0.5, 0.5});
  VectorField zero(16, 8.0);
  double eta = 0.0;
  for (int s = 0; s < 40; ++s) {
    push_in_place(e, zero, 50.0, kG, 0.01, PushScheme::exponential_midpoint);
    advect_in_place(tr, zero, kG, 0.01);
    eta = std::max(eta, trajectory_distance(e.unwrapped_positions(), tr.unwrapped_positions(), 8.0));
  }
  EXPECT_LT(eta, 1e-14);
}

TEST(Metrics, BoundaryLayerProfile) {
  std::vector<double> t{0.0, 0.1, 0.2, 0.3};
  std::vector<double> err{1.0, 0.5, 0.25, 0.125};
  auto p = boundary_layer_profile(t, err, 10.0);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p[2].fast_time, 2.0);
  EXPECT_DOUBLE_EQ(profile_value(p, 1.5), 0.375);
  EXPECT_DOUBLE_EQ(profile_value(p, -1.0), 1.0);
  EXPECT_DOUBLE_EQ(profile_value(p, 10.0), 0.125);
}

TEST(Metrics, FitRate) {
  std::vector<double> x{10, 20, 40, 80, 160}, y, z;
  for (double xi : x) {
    y.push_back(3.0 * std::pow(xi, -1.5));
    z.push_back(2.0 * std::exp(-0.25 * xi));
  }
  auto p = fit_rate(x, y, RateModel::power);
  EXPECT_NEAR(p.exponent, -1.5, 1e-12);
  EXPECT_NEAR(p.coefficient, 3.0, 1e-11);
  EXPECT_NEAR(p.r_squared, 1.0, 1e-12);
  auto q = fit_rate(x, z, RateModel::exponential);
  EXPECT_NEAR(q.exponent, -0.25, 1e-12);
  EXPECT_NEAR(q.coefficient, 2.0, 1e-10);
  y[2] *= 2.0;
  EXPECT_LT(fit_rate(x, y, RateModel::power).r_squared, 0.99);
}

TEST(OdeLemma, ValidationNamesThePremise) {
  OdeLemmaInstance inst;
  inst.lambda = 3.0;
  try {
    inst.validate();
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "lambda < 4 max(1, sup alpha)");
  }
  inst.lambda = 8.0;
  inst.alpha_knots = {0.0, 3.0};
  EXPECT_THROW(inst.validate(), std::invalid_argument);
  inst.alpha_knots = {0.0, 2.0};
  EXPECT_NO_THROW(inst.validate());
  inst.terminal = OdeLemmaInstance::Terminal::b_at_0_zero;
  inst.beta = 1.0;
  try {
    inst.validate();
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "beta must be zero when b(0) = 0");
  }
}

TEST(OdeLemma, AlphaIntegralIsExact) {
  OdeLemmaInstance inst;
  inst.T = 2.0;
  inst.alpha_knots = {0.0, 1.0, 0.0};
  EXPECT_DOUBLE_EQ(inst.alpha(0.5), 0.5);
  EXPECT_DOUBLE_EQ(inst.alpha_integral(0.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(inst.alpha_integral(0.5, 1.5), 0.75);
  EXPECT_DOUBLE_EQ(inst.alpha_max(), 1.0);
}

TEST(OdeLemma, SaturatedTrajectoryMeetsTheBound) {
  // Constant alpha, beta = 0, saturated: b' = lambda (alpha a - b), a' = -b
  // backward from (0, b0). Bound 1a is a <= 2b / lambda.
  OdeLemmaInstance inst;
  inst.lambda = 8.0;
  inst.alpha_knots = {1.0, 1.0};
  inst.b0 = 1.0;
  auto tr = integrate_ode_instance(inst, 0, 1e-3);
  ASSERT_GT(tr.t.size(), 10u);
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    EXPECT_GE(tr.a[i], 0.0);
    EXPECT_LE(tr.a[i], 2.0 * tr.b[i] / inst.lambda * (1 + 1e-9) + 1e-12);
  }
  auto rep = verify_ode_lemma(inst, 5);
  EXPECT_EQ(rep.violations(), 0);
  EXPECT_EQ(rep.trajectories, 6);
}

TEST(OdeLemma, CaseTwoRatioBound) {
  OdeLemmaInstance inst;
  inst.terminal = OdeLemmaInstance::Terminal::b_at_0_zero;
  inst.lambda = 12.0;
  inst.alpha_knots = {0.5, 3.0, 1.0};
  inst.a0 = 2.0;
  auto rep = verify_ode_lemma(inst, 10);
  EXPECT_EQ(rep.violations(), 0);
  EXPECT_LE(rep.max_b_over_a, 2.0 * inst.alpha_max());
  EXPECT_GT(rep.max_b_over_a, 0.0);
}

TEST(OdeLemma, SmallCampaignsAreCleanAndDeterministic) {
  using T = OdeLemmaInstance::Terminal;
  for (auto term : {T::a_at_T_zero, T::b_at_0_zero}) {
    auto a = ode_lemma_campaign(term, 50, 99);
    auto b = ode_lemma_campaign(term, 50, 99);
    EXPECT_EQ(a.violations(), 0);
    EXPECT_EQ(a.trajectories, 100);
    EXPECT_EQ(a.worst_1a, b.worst_1a);
    EXPECT_EQ(a.worst_2, b.worst_2);
  }
}

TEST(Record, CsvRoundTrip) {
  std::vector<DiagnosticsRecord> recs(3);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (auto& r : recs) {
    r.t = nd(rng);
    r.E = nd(rng) * 1e-300;
    r.eta_traj = 1.0 / 3.0;
    r.err_rho_holder = nd(rng);
    r.d_lambda_delta = {nd(rng), nd(rng)};
    r.brinkman_iterations = 17;
  }
  std::vector<double> deltas{0.8, 0.4};
  std::stringstream ss;
  write_csv(ss, recs, deltas);
  auto header = csv_header(deltas);
  EXPECT_EQ(header.front(), "t");
  EXPECT_EQ(header[11], "d_lambda_delta_0.8");
  EXPECT_EQ(header[12], "d_lambda_delta_0.4");
  EXPECT_EQ(header.back(), "brinkman_iterations");
  auto back = read_csv(ss);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(back[i].t, recs[i].t);
    EXPECT_EQ(back[i].E, recs[i].E);
    EXPECT_EQ(back[i].eta_traj, recs[i].eta_traj);
    EXPECT_EQ(back[i].err_rho_holder, recs[i].err_rho_holder);
    EXPECT_EQ(back[i].d_lambda_delta, recs[i].d_lambda_delta);
    EXPECT_EQ(back[i].brinkman_iterations, 17);
  }
  std::stringstream bad("t,mass\n1,2\n");
  EXPECT_THROW(read_csv(bad), std::runtime_error);
}
