#include "vstokes/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "vstokes/params.hpp"

namespace vstokes {

namespace {

constexpr double kGaussSigma = 0.4;
constexpr double kPlummerScale = 0.5;

// Half-width of the tensor cube relative to the bounding-ball radius.
const double kTensorHalfWidth = 1.0 / std::sqrt(3.0);

double tensor_factor(double y) {
  if (std::abs(y) >= 1.0) return 0.0;
  double q = 1.0 - y * y;
  return q * q;
}

// Density of the unit-mass profile centred at c with the given radius.
double factor_density(InitialFamily family, const Vec3& y, const Vec3& c, double radius) {
  Vec3 d = y - c;
  if (family == InitialFamily::tensor_bump) {
    double a = radius * kTensorHalfWidth;
    return tensor_factor(d[0] / a) * tensor_factor(d[1] / a) * tensor_factor(d[2] / a) /
           profile_mass(family, radius);
  }
  return radial_profile(family, d.norm() / radius) / profile_mass(family, radius);
}

class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : rng_(seed) {}
  // Uniform on [0, 1) from the top 53 bits, independent of the standard
  // library's distribution implementation.
  double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * next() - 1.0; }

 private:
  std::mt19937_64 rng_;
};

Vec3 sample_factor(InitialFamily family, const Vec3& c, double radius, UniformSource& src) {
  if (family == InitialFamily::tensor_bump) {
    Vec3 y;
    for (int a = 0; a < 3; ++a) {
      for (;;) {
        double s = src.symmetric();
        if (src.next() < tensor_factor(s)) {
          y[a] = s;
          break;
        }
      }
    }
    return c + radius * kTensorHalfWidth * y;
  }
  const double peak = radial_profile(family, 0.0);
  for (;;) {
    Vec3 y{src.symmetric(), src.symmetric(), src.symmetric()};
    double s = y.norm();
    if (s >= 1.0) continue;
    if (src.next() * peak < radial_profile(family, s)) return c + radius * y;
  }
}

}  // namespace

InitialFamily parse_family(std::string_view name) {
  if (name == "gaussian_bump") return InitialFamily::gaussian_bump;
  if (name == "plummer_ball") return InitialFamily::plummer_ball;
  if (name == "tensor_bump") return InitialFamily::tensor_bump;
  throw ConfigError("unknown initial-data family: " + std::string(name));
}

std::string_view family_name(InitialFamily f) {
  switch (f) {
    case InitialFamily::gaussian_bump:
      return "gaussian_bump";
    case InitialFamily::plummer_ball:
      return "plummer_ball";
    case InitialFamily::tensor_bump:
      return "tensor_bump";
  }
  return "unknown";
}

double radial_profile(InitialFamily family, double s) {
  if (s >= 1.0) return 0.0;
  switch (family) {
    case InitialFamily::gaussian_bump: {
      double k = 1.0 / (2.0 * kGaussSigma * kGaussSigma);
      return std::exp(-k * s * s) - std::exp(-k);
    }
    case InitialFamily::plummer_ball: {
      double a2 = kPlummerScale * kPlummerScale;
      return std::pow(1.0 + s * s / a2, -2.5) - std::pow(1.0 + 1.0 / a2, -2.5);
    }
    case InitialFamily::tensor_bump:
      break;
  }
  throw std::invalid_argument("radial_profile: tensor_bump is not radial");
}

namespace {

// Composite Simpson on s in [0, 1] of s^2 phi(s); the profile is smooth on
// the closed interval.
double unit_radial_moment(InitialFamily family) {
  constexpr int m = 4096;
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    double s = static_cast<double>(i) / m;
    double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * s * s * radial_profile(family, s);
  }
  return sum / (3.0 * m);
}

}  // namespace

double profile_mass(InitialFamily family, double radius) {
  if (family == InitialFamily::tensor_bump) {
    double side = 16.0 / 15.0 * radius * kTensorHalfWidth;
    return side * side * side;
  }
  static const double gaussian = unit_radial_moment(InitialFamily::gaussian_bump);
  static const double plummer = unit_radial_moment(InitialFamily::plummer_ball);
  const double integral = family == InitialFamily::gaussian_bump ? gaussian : plummer;
  return 4.0 * std::numbers::pi * radius * radius * radius * integral;
}

double InitialData::position_density(const Vec3& x) const {
  return total_mass * factor_density(family, x, center_x, radius_x);
}

double InitialData::velocity_density(const Vec3& v) const {
  return factor_density(family, v, center_v, radius_v);
}

InitialData build_initial_data(const nlohmann::json& raw) {
  InitialData d;
  auto get_vec = [&](const char* key) {
    if (!raw.contains(key)) throw ConfigError(std::string("missing field: ") + key);
    const auto& v = raw.at(key);
    if (!v.is_array() || v.size() != 3) throw ConfigError(std::string("field is not a 3-vector: ") + key);
    return Vec3{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
  };
  auto get_num = [&](const char* key) {
    if (!raw.contains(key) || !raw.at(key).is_number())
      throw ConfigError(std::string("missing or non-numeric field: ") + key);
    return raw.at(key).get<double>();
  };
  if (!raw.contains("family") || !raw.at("family").is_string())
    throw ConfigError("missing field: family");
  d.family = parse_family(raw.at("family").get<std::string>());
  d.center_x = get_vec("center_x");
  d.radius_x = get_num("radius_x");
  d.center_v = get_vec("center_v");
  d.radius_v = get_num("radius_v");
  if (!(d.radius_x > 0.0)) throw ConfigError("radius_x must be positive");
  if (!(d.radius_v > 0.0)) throw ConfigError("radius_v must be positive");
  return d;
}

PhaseEnsemble sample_ensemble(const InitialData& init, std::size_t n, std::uint64_t seed,
                              double box_length) {
  if (n < 1) throw std::invalid_argument("sample_ensemble: n must be at least 1");
  UniformSource src(seed);
  std::vector<Vec3> x(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = sample_factor(init.family, init.center_x, init.radius_x, src);
    v[i] = sample_factor(init.family, init.center_v, init.radius_v, src);
  }
  std::vector<double> w(n, init.total_mass / static_cast<double>(n));
  return PhaseEnsemble(box_length, std::move(x), std::move(v), std::move(w));
}

}  // namespace vstokes
