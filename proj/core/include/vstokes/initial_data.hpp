#pragma once

#include <cstdint>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "vstokes/ensemble.hpp"
#include "vstokes/types.hpp"

namespace vstokes {

enum class InitialFamily { gaussian_bump, plummer_ball, tensor_bump };

InitialFamily parse_family(std::string_view name);
std::string_view family_name(InitialFamily f);

/// Product-form initial datum f0(x, v) = P(x) * W(v) with unit total mass.
///
/// Each factor is a compactly supported Lipschitz bump. For the radial
/// families the support is the closed ball of the given radius; the
/// tensor family is a product of one-dimensional (1 - s^2)^2 profiles on a
/// cube inscribed in that ball, so `radius` always bounds the support.
struct InitialData {
  InitialFamily family = InitialFamily::gaussian_bump;
  Vec3 center_x{4.0, 4.0, 5.0};
  double radius_x = 1.0;
  Vec3 center_v{0.0, 0.0, 0.0};
  double radius_v = 1.0;
  double total_mass = 1.0;

  /// rho_0(x) = integral of f0 over v.
  double position_density(const Vec3& x) const;
  /// Velocity marginal, normalised to unit integral.
  double velocity_density(const Vec3& v) const;
  double density(const Vec3& x, const Vec3& v) const {
    return position_density(x) * velocity_density(v);
  }
};

InitialData build_initial_data(const nlohmann::json& raw);

/// Unnormalised one-dimensional profile phi(s), s = |y| / radius, used by the
/// radial families; zero for s >= 1.
double radial_profile(InitialFamily family, double s);

/// Integral of radial_profile(|y|/radius) over R^3 (or of the tensor
/// profile over its cube).
double profile_mass(InitialFamily family, double radius);

/// Draws n particles i.i.d. from f0 with uniform weights 1/n. Deterministic
/// for a given seed.
PhaseEnsemble sample_ensemble(const InitialData& init, std::size_t n, std::uint64_t seed,
                              double box_length);

}  // namespace vstokes
