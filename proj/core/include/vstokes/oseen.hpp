#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "vstokes/field.hpp"

namespace vstokes {

/// Free-space Stokeslet Phi(y) = (1 / 8 pi) (I / |y| + y y^T / |y|^3).
/// Throws std::domain_error("singular evaluation") at y = 0.
Mat3 oseen_tensor(const Vec3& y);

struct PointForce {
  Vec3 position;
  Vec3 force;
};

/// Direct summation u(x) = sum_q Phi(x - y_q) F_q.
Vec3 oseen_velocity(std::span<const PointForce> forces, const Vec3& x);

/// Midpoint-rule quadrature of the force density direction * f: one point
/// force h^3 f(c) direction at every cell centre c where f is nonzero.
std::vector<PointForce> quadrature_forces(const ScalarField& f, const Vec3& direction);

}  // namespace vstokes
