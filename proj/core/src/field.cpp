#include "vstokes/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vstokes/summation.hpp"

namespace vstokes {

ScalarField::ScalarField(int n, double box_length, double fill)
    : n_(n), box_length_(box_length), values_(static_cast<std::size_t>(n) * n * n, fill) {
  if (n < 1) throw std::invalid_argument("ScalarField: n must be positive");
  if (!(box_length > 0.0)) throw std::invalid_argument("ScalarField: box_length must be positive");
}

double ScalarField::sum() const {
  CompensatedSum s;
  for (double v : values_) s.add(v);
  return s.value();
}

double ScalarField::max() const { return *std::max_element(values_.begin(), values_.end()); }
double ScalarField::min() const { return *std::min_element(values_.begin(), values_.end()); }

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

namespace {
void require_same(const ScalarField& a, const ScalarField& b) {
  if (!a.same_grid(b)) throw std::invalid_argument("field grids differ");
}
}  // namespace

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }

VectorField::VectorField(int n, double box_length)
    : comp_{ScalarField(n, box_length), ScalarField(n, box_length), ScalarField(n, box_length)} {}

void VectorField::fill(const Vec3& v) {
  for (int c = 0; c < 3; ++c) std::fill(comp_[c].values().begin(), comp_[c].values().end(), v[c]);
}

bool VectorField::all_finite() const {
  return comp_[0].all_finite() && comp_[1].all_finite() && comp_[2].all_finite();
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (int c = 0; c < 3; ++c) comp_[c] += o.comp_[c];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (int c = 0; c < 3; ++c) comp_[c] -= o.comp_[c];
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  for (int c = 0; c < 3; ++c) comp_[c] *= s;
  return *this;
}

VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator+(VectorField a, const VectorField& b) { return a += b; }

VectorField axpby(double a, const VectorField& x, double b, const VectorField& y) {
  if (!x.same_grid(y)) throw std::invalid_argument("field grids differ");
  VectorField r(x.n(), x.box_length());
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < x.size(); ++i) r[c][i] = a * x[c][i] + b * y[c][i];
  return r;
}

}  // namespace vstokes
