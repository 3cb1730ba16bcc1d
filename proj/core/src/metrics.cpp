#include "vstokes/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vstokes/cube.hpp"

namespace vstokes {

double d_lambda_delta(const ScalarField& rho_l, const ScalarField& rho_s, double delta,
                      double lattice_spacing) {
  if (!rho_l.same_grid(rho_s)) throw std::invalid_argument("d_lambda_delta: grids differ");
  return max_abs_cube_average(rho_l - rho_s, delta, lattice_spacing);
}

double trajectory_distance(std::span<const Vec3> kinetic, std::span<const Vec3> tracers,
                           double box_length) {
  if (kinetic.size() != tracers.size())
    throw std::invalid_argument("trajectory_distance: ensembles differ in size");
  double m = 0.0;
  for (std::size_t i = 0; i < kinetic.size(); ++i)
    m = std::max(m, minimal_image(kinetic[i] - tracers[i], box_length).squaredNorm());
  return std::sqrt(m);
}

std::vector<ProfilePoint> boundary_layer_profile(std::span<const double> t,
                                                 std::span<const double> err, double lambda) {
  if (t.size() != err.size()) throw std::invalid_argument("profile: series lengths differ");
  std::vector<ProfilePoint> p(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) p[i] = {lambda * t[i], err[i]};
  return p;
}

double profile_value(std::span<const ProfilePoint> profile, double s) {
  if (profile.empty()) throw std::invalid_argument("profile: empty");
  if (s <= profile.front().fast_time) return profile.front().value;
  if (s >= profile.back().fast_time) return profile.back().value;
  auto it = std::upper_bound(profile.begin(), profile.end(), s,
                             [](double v, const ProfilePoint& p) { return v < p.fast_time; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double w = (s - a.fast_time) / (b.fast_time - a.fast_time);
  return a.value + w * (b.value - a.value);
}

RateFit fit_rate(std::span<const double> xs, std::span<const double> ys, RateModel model) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_rate: need at least two matched points");
  const std::size_t n = xs.size();
  std::vector<double> X(n), Y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(ys[i] > 0.0)) throw std::invalid_argument("fit_rate: values must be positive");
    if (model == RateModel::power && !(xs[i] > 0.0))
      throw std::invalid_argument("fit_rate: abscissae must be positive");
    X[i] = model == RateModel::power ? std::log(xs[i]) : xs[i];
    Y[i] = std::log(ys[i]);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += X[i];
    my += Y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (X[i] - mx) * (X[i] - mx);
    sxy += (X[i] - mx) * (Y[i] - my);
    syy += (Y[i] - my) * (Y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_rate: abscissae are all equal");
  const double slope = sxy / sxx;
  const double icpt = my - slope * mx;
  const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {std::exp(icpt), slope, r2};
}

}  // namespace vstokes
