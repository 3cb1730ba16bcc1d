#include "vstokes/oseen.hpp"

#include <numbers>

namespace vstokes {

Mat3 oseen_tensor(const Vec3& y) {
  const double r = y.norm();
  if (r == 0.0) throw std::domain_error("singular evaluation");
  const double c = 1.0 / (8.0 * std::numbers::pi);
  return c * (Mat3::Identity() / r + y * y.transpose() / (r * r * r));
}

Vec3 oseen_velocity(std::span<const PointForce> forces, const Vec3& x) {
  Vec3 u = Vec3::Zero();
  for (const auto& q : forces) u += oseen_tensor(x - q.position) * q.force;
  return u;
}

std::vector<PointForce> quadrature_forces(const ScalarField& f, const Vec3& direction) {
  std::vector<PointForce> out;
  const int n = f.n();
  const double vol = f.cell_volume();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (double v = f(i, j, k); v != 0.0) out.push_back({f.center(i, j, k), vol * v * direction});
  return out;
}

}  // namespace vstokes
