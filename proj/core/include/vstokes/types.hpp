#pragma once

#include <cmath>

#include <Eigen/Core>

namespace vstokes {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Reduces a coordinate into [0, L).
inline double wrap_coordinate(double x, double box_length) {
  double r = x - box_length * std::floor(x / box_length);
  if (r >= box_length) r = 0.0;
  return r;
}

inline Vec3 wrap_position(const Vec3& x, double box_length) {
  return {wrap_coordinate(x[0], box_length), wrap_coordinate(x[1], box_length),
          wrap_coordinate(x[2], box_length)};
}

/// Minimal-image representative of a displacement on the periodic box.
inline Vec3 minimal_image(const Vec3& d, double box_length) {
  Vec3 r = d;
  for (int a = 0; a < 3; ++a) r[a] -= box_length * std::round(r[a] / box_length);
  return r;
}

}  // namespace vstokes
