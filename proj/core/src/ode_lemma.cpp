#include "vstokes/ode_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vstokes {

double OdeLemmaInstance::alpha(double t) const {
  const int m = static_cast<int>(alpha_knots.size()) - 1;
  const double s = std::clamp(t / T, 0.0, 1.0) * m;
  const int k = std::min(static_cast<int>(s), m - 1);
  const double w = s - k;
  return (1.0 - w) * alpha_knots[k] + w * alpha_knots[k + 1];
}

double OdeLemmaInstance::alpha_max() const {
  return *std::max_element(alpha_knots.begin(), alpha_knots.end());
}

double OdeLemmaInstance::alpha_integral(double s, double t) const {
  // Trapezoid rule is exact on each linear piece.
  const int m = static_cast<int>(alpha_knots.size()) - 1;
  const double seg = T / m;
  auto prefix = [&](double x) {
    x = std::clamp(x, 0.0, T);
    double acc = 0.0;
    int k = 0;
    for (; k < m && (k + 1) * seg <= x; ++k) acc += 0.5 * seg * (alpha_knots[k] + alpha_knots[k + 1]);
    const double rest = x - k * seg;
    if (rest > 0.0 && k < m) acc += 0.5 * rest * (alpha_knots[k] + alpha(x));
    return acc;
  };
  return prefix(t) - prefix(s);
}

void OdeLemmaInstance::validate() const {
  if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
  if (alpha_knots.size() < 2) throw std::invalid_argument("alpha needs at least two knots");
  for (double a : alpha_knots)
    if (!(a >= 0.0)) throw std::invalid_argument("alpha must be nonnegative");
  if (!(a0 >= 0.0) || !(b0 >= 0.0)) throw std::invalid_argument("a and b must be nonnegative");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
  if (!(lambda >= 4.0 * std::max(1.0, alpha_max())))
    throw std::invalid_argument("lambda < 4 max(1, sup alpha)");
  if (terminal == Terminal::b_at_0_zero && beta != 0.0)
    throw std::invalid_argument("beta must be zero when b(0) = 0");
}

namespace {

constexpr int kBlocks = 16;

struct Pattern {
  // Per block: a' = sign * b, b' = rhs - slack * |rhs|.
  std::vector<double> sign;
  std::vector<double> slack;
};

Pattern make_pattern(OdeLemmaInstance::Terminal terminal, std::uint64_t seed) {
  Pattern p{std::vector<double>(kBlocks, -1.0), std::vector<double>(kBlocks, 0.0)};
  if (seed == 0) return p;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < kBlocks; ++k) {
    // Backward construction keeps a >= 0 only while a' <= 0.
    p.sign[k] = terminal == OdeLemmaInstance::Terminal::a_at_T_zero ? -unit(rng)
                                                                   : 2.0 * unit(rng) - 1.0;
    p.slack[k] = unit(rng) < 0.3 ? 0.0 : unit(rng);
  }
  return p;
}

}  // namespace

OdeTrajectory integrate_ode_instance(const OdeLemmaInstance& inst, std::uint64_t pattern_seed,
                                     double max_step) {
  inst.validate();
  const Pattern pat = make_pattern(inst.terminal, pattern_seed);
  const double cap = std::min({max_step, inst.T / 2000.0, 0.02 / inst.lambda});
  const int n = static_cast<int>(std::ceil(inst.T / cap));
  const double h = inst.T / n;
  const bool backward = inst.terminal == OdeLemmaInstance::Terminal::a_at_T_zero;

  auto rhs = [&](double t, double a, double b, int block) {
    double db = inst.lambda * (inst.alpha(t) * a - b) + inst.beta * std::exp(-inst.lambda * t);
    db -= pat.slack[block] * std::abs(db);
    return std::pair<double, double>{pat.sign[block] * b, db};
  };

  OdeTrajectory tr;
  tr.t.resize(n + 1);
  tr.a.resize(n + 1);
  tr.b.resize(n + 1);
  int first = 0;
  if (backward) {
    tr.t[n] = inst.T;
    tr.a[n] = 0.0;
    tr.b[n] = inst.b0;
    for (int i = n; i > 0; --i) {
      const int block = std::min(kBlocks - 1, (i - 1) * kBlocks / n);
      const double t = i * h, a = tr.a[i], b = tr.b[i], s = -h;
      auto [k1a, k1b] = rhs(t, a, b, block);
      auto [k2a, k2b] = rhs(t + 0.5 * s, a + 0.5 * s * k1a, b + 0.5 * s * k1b, block);
      auto [k3a, k3b] = rhs(t + 0.5 * s, a + 0.5 * s * k2a, b + 0.5 * s * k2b, block);
      auto [k4a, k4b] = rhs(t + s, a + s * k3a, b + s * k3b, block);
      tr.t[i - 1] = (i - 1) * h;
      tr.a[i - 1] = a + s / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
      tr.b[i - 1] = b + s / 6.0 * (k1b + 2 * k2b + 2 * k3b + k4b);
      // The premises need a, b >= 0; keep the valid terminal segment only.
      if (tr.a[i - 1] < 0.0 || tr.b[i - 1] < 0.0 || !std::isfinite(tr.b[i - 1])) {
        first = i;
        break;
      }
    }
  } else {
    tr.t[0] = 0.0;
    tr.a[0] = inst.a0;
    tr.b[0] = 0.0;
    for (int i = 0; i < n; ++i) {
      const int block = std::min(kBlocks - 1, i * kBlocks / n);
      const double t = i * h, a = tr.a[i], b = tr.b[i];
      auto [k1a, k1b] = rhs(t, a, b, block);
      auto [k2a, k2b] = rhs(t + 0.5 * h, a + 0.5 * h * k1a, b + 0.5 * h * k1b, block);
      auto [k3a, k3b] = rhs(t + 0.5 * h, a + 0.5 * h * k2a, b + 0.5 * h * k2b, block);
      auto [k4a, k4b] = rhs(t + h, a + h * k3a, b + h * k3b, block);
      tr.t[i + 1] = (i + 1) * h;
      tr.a[i + 1] = a + h / 6.0 * (k1a + 2 * k2a + 2 * k3a + k4a);
      tr.b[i + 1] = std::max(0.0, b + h / 6.0 * (k1b + 2 * k2b + 2 * k3b + k4b));
      if (tr.a[i + 1] < 0.0) {
        tr.t.resize(i + 1);
        tr.a.resize(i + 1);
        tr.b.resize(i + 1);
        break;
      }
    }
  }
  if (first > 0) {
    tr.t.erase(tr.t.begin(), tr.t.begin() + first);
    tr.a.erase(tr.a.begin(), tr.a.begin() + first);
    tr.b.erase(tr.b.begin(), tr.b.begin() + first);
  }
  return tr;
}

void OdeLemmaReport::merge(const OdeLemmaReport& o) {
  trajectories += o.trajectories;
  violations_1a += o.violations_1a;
  violations_1b += o.violations_1b;
  violations_2 += o.violations_2;
  worst_1a = std::max(worst_1a, o.worst_1a);
  worst_1b = std::max(worst_1b, o.worst_1b);
  worst_2 = std::max(worst_2, o.worst_2);
  max_b_over_a = std::max(max_b_over_a, o.max_b_over_a);
}

namespace {

// (lhs - rhs) / scale; positive beyond kOdeSlack is a violation.
double excess(double lhs, double rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return (lhs - rhs) / scale;
}

void check_case_one(const OdeLemmaInstance& inst, const OdeTrajectory& tr, OdeLemmaReport& rep) {
  const double lam = inst.lambda;
  const std::size_t n = tr.t.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double rhs = 2.0 / lam * tr.b[i] + 4.0 / (lam * lam) * inst.beta * std::exp(-lam * tr.t[i]);
    const double x = excess(tr.a[i], rhs);
    rep.worst_1a = std::max(rep.worst_1a, x);
    if (x > kOdeSlack) ++rep.violations_1a;
  }
  // Pairs s <= t on a subsampled set of time levels.
  const std::size_t stride = std::max<std::size_t>(1, n / 200);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  std::vector<double> prefix(idx.size());
  for (std::size_t q = 0; q < idx.size(); ++q)
    prefix[q] = 2.0 * inst.alpha_integral(tr.t[0], tr.t[idx[q]]) - lam * (tr.t[idx[q]] - tr.t[0]);
  bool violated = false;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const std::size_t s = idx[p];
    const double start = tr.b[s] + 2.0 * inst.beta / lam * std::exp(-lam * tr.t[s]);
    for (std::size_t q = p; q < idx.size(); ++q) {
      const double rhs = std::exp(prefix[q] - prefix[p]) * start;
      const double x = excess(tr.b[idx[q]], rhs);
      rep.worst_1b = std::max(rep.worst_1b, x);
      if (x > kOdeSlack) violated = true;
    }
  }
  if (violated) ++rep.violations_1b;
}

void check_case_two(const OdeLemmaInstance& inst, const OdeTrajectory& tr, OdeLemmaReport& rep) {
  const double am = inst.alpha_max();
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    const double x = excess(tr.b[i], 2.0 * am * tr.a[i]);
    rep.worst_2 = std::max(rep.worst_2, x);
    if (x > kOdeSlack) ++rep.violations_2;
    if (tr.a[i] > 0.0) rep.max_b_over_a = std::max(rep.max_b_over_a, tr.b[i] / tr.a[i]);
  }
}

}  // namespace

OdeLemmaReport verify_ode_lemma(const OdeLemmaInstance& inst, int n_random, std::uint64_t seed) {
  inst.validate();
  OdeLemmaReport rep;
  std::mt19937_64 rng(seed);
  for (int r = 0; r <= n_random; ++r) {
    std::uint64_t pattern = r == 0 ? 0 : (rng() | 1u);
    OdeTrajectory tr = integrate_ode_instance(inst, pattern, inst.T);
    if (tr.t.size() < 2) continue;
    ++rep.trajectories;
    if (inst.terminal == OdeLemmaInstance::Terminal::a_at_T_zero)
      check_case_one(inst, tr, rep);
    else
      check_case_two(inst, tr, rep);
  }
  return rep;
}

OdeLemmaInstance random_ode_instance(OdeLemmaInstance::Terminal terminal, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  OdeLemmaInstance inst;
  inst.terminal = terminal;
  inst.lambda = 4.0 + 36.0 * unit(rng);
  inst.T = 0.2 + 1.8 * unit(rng);
  const int knots = 2 + static_cast<int>(rng() % 5);
  inst.alpha_knots.resize(knots);
  for (double& a : inst.alpha_knots) a = 0.25 * inst.lambda * unit(rng);
  if (terminal == OdeLemmaInstance::Terminal::a_at_T_zero) {
    inst.beta = 10.0 * unit(rng);
    inst.b0 = 0.1 + 9.9 * unit(rng);
    inst.a0 = 0.0;
  } else {
    inst.beta = 0.0;
    inst.a0 = 0.1 + 9.9 * unit(rng);
    inst.b0 = 0.0;
  }
  return inst;
}

OdeLemmaReport ode_lemma_campaign(OdeLemmaInstance::Terminal terminal, int n_instances,
                                  std::uint64_t seed, int n_random_per_instance) {
  OdeLemmaReport total;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n_instances; ++i) {
    const std::uint64_t s = rng();
    total.merge(verify_ode_lemma(random_ode_instance(terminal, s), n_random_per_instance, s ^ 0x9e3779b97f4a7c15ULL));
  }
  return total;
}

}  // namespace vstokes
