#pragma once

#include <span>
#include <vector>

#include "vstokes/field.hpp"

namespace vstokes {

/// sup over side-delta cubes (corners on a lattice of the given spacing,
/// default h/2) of |avg_Q rho_l - avg_Q rho_s|.
double d_lambda_delta(const ScalarField& rho_l, const ScalarField& rho_s, double delta,
                      double lattice_spacing = 0.0);

/// max over index-paired points of the minimal-image distance. Throws
/// std::invalid_argument when the pairing sizes differ.
double trajectory_distance(std::span<const Vec3> kinetic, std::span<const Vec3> tracers,
                           double box_length);

struct ProfilePoint {
  double fast_time;  // lambda * t
  double value;
};

/// Resamples an error time series against the fast variable lambda t.
std::vector<ProfilePoint> boundary_layer_profile(std::span<const double> t,
                                                 std::span<const double> err, double lambda);

/// Piecewise-linear evaluation of a profile; clamps outside its range.
double profile_value(std::span<const ProfilePoint> profile, double fast_time);

enum class RateModel { power, exponential };

/// y = coefficient * x^exponent (power) or coefficient * e^{exponent x}
/// (exponential), fitted by least squares on log y.
struct RateFit {
  double coefficient;
  double exponent;
  double r_squared;
};

RateFit fit_rate(std::span<const double> xs, std::span<const double> ys, RateModel model);

}  // namespace vstokes
