#pragma once

#include <array>
#include <span>
#include <vector>

#include "vstokes/types.hpp"

namespace vstokes {

/// Cell-centred samples on the periodic grid [0, L)^3 with n cells per axis.
/// Storage is row-major with the x index slowest: idx = (i * n + j) * n + k.
/// Cell (i, j, k) has centre ((i + 1/2) h, (j + 1/2) h, (k + 1/2) h).
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(int n, double box_length, double fill = 0.0);

  int n() const { return n_; }
  double box_length() const { return box_length_; }
  double cell_size() const { return box_length_ / n_; }
  double cell_volume() const {
    double h = cell_size();
    return h * h * h;
  }
  std::size_t size() const { return values_.size(); }

  double& operator[](std::size_t idx) { return values_[idx]; }
  double operator[](std::size_t idx) const { return values_[idx]; }
  double& operator()(int i, int j, int k) { return values_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  Vec3 center(int i, int j, int k) const {
    double h = cell_size();
    return {(i + 0.5) * h, (j + 0.5) * h, (k + 0.5) * h};
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  bool same_grid(const ScalarField& o) const {
    return n_ == o.n_ && box_length_ == o.box_length_;
  }
  double sum() const;
  double max() const;
  double min() const;
  bool all_finite() const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);

 private:
  int n_ = 0;
  double box_length_ = 0.0;
  std::vector<double> values_;
};

ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator+(ScalarField a, const ScalarField& b);

/// Three ScalarField components on a shared grid.
class VectorField {
 public:
  VectorField() = default;
  VectorField(int n, double box_length);

  int n() const { return comp_[0].n(); }
  double box_length() const { return comp_[0].box_length(); }
  double cell_size() const { return comp_[0].cell_size(); }
  double cell_volume() const { return comp_[0].cell_volume(); }
  std::size_t size() const { return comp_[0].size(); }

  ScalarField& operator[](int c) { return comp_[c]; }
  const ScalarField& operator[](int c) const { return comp_[c]; }

  Vec3 at(std::size_t idx) const { return {comp_[0][idx], comp_[1][idx], comp_[2][idx]}; }
  void set(std::size_t idx, const Vec3& v) {
    for (int c = 0; c < 3; ++c) comp_[c][idx] = v[c];
  }
  void fill(const Vec3& v);

  bool same_grid(const VectorField& o) const { return comp_[0].same_grid(o.comp_[0]); }
  bool same_grid(const ScalarField& o) const { return comp_[0].same_grid(o); }
  bool all_finite() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double s);

 private:
  std::array<ScalarField, 3> comp_;
};

VectorField operator-(VectorField a, const VectorField& b);
VectorField operator+(VectorField a, const VectorField& b);

/// Velocity gradient samples, g[i][j] = d u_i / d x_j.
using TensorField = std::array<VectorField, 3>;

/// Linear combination a * x + b * y.
VectorField axpby(double a, const VectorField& x, double b, const VectorField& y);

}  // namespace vstokes
