#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vstokes {

/// An instance of the differential inequality system
///   |a'| <= b,  b' <= lambda (alpha a - b) + beta e^{-lambda s}
/// on [0, T] with a, b >= 0.
///
/// alpha is piecewise linear through `alpha_knots` placed uniformly on
/// [0, T]. For the terminal case a(T) = 0 the trajectory is constructed
/// backward from (a, b)(T) = (0, b0); for the case b(0) = 0 (which requires
/// beta = 0) it is integrated forward from (a, b)(0) = (a0, 0).
struct OdeLemmaInstance {
  enum class Terminal { a_at_T_zero, b_at_0_zero };

  double a0 = 0.0;
  double b0 = 1.0;
  std::vector<double> alpha_knots{0.0, 0.0};
  double beta = 0.0;
  double lambda = 4.0;
  double T = 1.0;
  Terminal terminal = Terminal::a_at_T_zero;

  double alpha(double t) const;
  double alpha_max() const;
  /// Exact integral of alpha over [s, t].
  double alpha_integral(double s, double t) const;
  /// Throws std::invalid_argument naming the failed premise.
  void validate() const;
};

struct OdeTrajectory {
  std::vector<double> t;
  std::vector<double> a;
  std::vector<double> b;
};

/// How the inequalities are saturated: sign of a' (fraction of b used with
/// direction) and slack subtracted from b'. Pattern 0 is the fully
/// saturated extremal choice; other seeds draw random piecewise-constant
/// choices per step block.
OdeTrajectory integrate_ode_instance(const OdeLemmaInstance& inst, std::uint64_t pattern_seed,
                                     double max_step);

struct OdeLemmaReport {
  int trajectories = 0;
  int violations_1a = 0;
  int violations_1b = 0;
  int violations_2 = 0;
  /// Largest (lhs - rhs) / scale observed for each bound.
  double worst_1a = -1.0;
  double worst_1b = -1.0;
  double worst_2 = -1.0;
  /// Largest b / a observed in case (ii).
  double max_b_over_a = 0.0;

  int violations() const { return violations_1a + violations_1b + violations_2; }
  void merge(const OdeLemmaReport& o);
};

inline constexpr double kOdeSlack = 1e-6;

/// Integrates the saturated pattern plus n_random random patterns with RK4
/// at step <= min(T / 2000, 0.02 / lambda) and checks
///   (i)  a(t) <= (2/lambda) b(t) + (4/lambda^2) beta e^{-lambda t} and
///        b(t) <= exp(int_s^t (2 alpha - lambda)) (b(s) + (2 beta / lambda) e^{-lambda s}),
///   (ii) b(t) <= 2 ||alpha||_inf a(t),
/// with slack kOdeSlack times the size of the compared quantities.
OdeLemmaReport verify_ode_lemma(const OdeLemmaInstance& inst, int n_random, std::uint64_t seed = 1);

/// Random instance with piecewise-linear alpha in [0, lambda / 4] and
/// beta in [0, 10] (case (i)) or beta = 0 (case (ii)).
OdeLemmaInstance random_ode_instance(OdeLemmaInstance::Terminal terminal, std::uint64_t seed);

/// Seeded campaign of n instances of one case.
OdeLemmaReport ode_lemma_campaign(OdeLemmaInstance::Terminal terminal, int n_instances,
                                  std::uint64_t seed, int n_random_per_instance = 1);

}  // namespace vstokes
