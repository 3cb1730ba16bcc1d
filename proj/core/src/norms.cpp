#include "vstokes/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vstokes/spectral.hpp"
#include "vstokes/summation.hpp"

namespace vstokes {

double field_norm(const ScalarField& f, Norm which) {
  switch (which) {
    case Norm::L1: {
      CompensatedSum s;
      for (double v : f.values()) s.add(std::abs(v));
      return s.value() * f.cell_volume();
    }
    case Norm::L2: {
      CompensatedSum s;
      for (double v : f.values()) s.add(v * v);
      return std::sqrt(s.value() * f.cell_volume());
    }
    case Norm::Linf: {
      double m = 0.0;
      for (double v : f.values()) m = std::max(m, std::abs(v));
      return m;
    }
    case Norm::W1inf:
      return field_norm(f, Norm::Linf) + field_norm(spectral_gradient(f), Norm::Linf);
  }
  return 0.0;
}

double field_norm(const VectorField& f, Norm which) {
  switch (which) {
    case Norm::L1: {
      CompensatedSum s;
      for (std::size_t i = 0; i < f.size(); ++i) s.add(f.at(i).norm());
      return s.value() * f.cell_volume();
    }
    case Norm::L2: {
      CompensatedSum s;
      for (std::size_t i = 0; i < f.size(); ++i) s.add(f.at(i).squaredNorm());
      return std::sqrt(s.value() * f.cell_volume());
    }
    case Norm::Linf: {
      double m = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, f.at(i).squaredNorm());
      return std::sqrt(m);
    }
    case Norm::W1inf:
      return field_norm(f, Norm::Linf) + gradient_linf(spectral_gradient(f));
  }
  return 0.0;
}

double weighted_l2_norm(const VectorField& f, const ScalarField& rho) {
  if (!f.same_grid(rho)) throw std::invalid_argument("weighted_l2_norm: grids differ");
  CompensatedSum s;
  for (std::size_t i = 0; i < f.size(); ++i) s.add(rho[i] * f.at(i).squaredNorm());
  return std::sqrt(s.value() * f.cell_volume());
}

double weighted_l2_norm(const ScalarField& f, const ScalarField& rho) {
  if (!f.same_grid(rho)) throw std::invalid_argument("weighted_l2_norm: grids differ");
  CompensatedSum s;
  for (std::size_t i = 0; i < f.size(); ++i) s.add(rho[i] * f[i] * f[i]);
  return std::sqrt(s.value() * f.cell_volume());
}

double inner_product(const VectorField& f, const VectorField& g) {
  if (!f.same_grid(g)) throw std::invalid_argument("inner_product: grids differ");
  CompensatedSum s;
  for (std::size_t i = 0; i < f.size(); ++i) s.add(f.at(i).dot(g.at(i)));
  return s.value() * f.cell_volume();
}

double gradient_linf(const TensorField& g) {
  double m = 0.0;
  for (std::size_t idx = 0; idx < g[0].size(); ++idx) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += g[i][j][idx] * g[i][j][idx];
    m = std::max(m, s);
  }
  return std::sqrt(m);
}

double gradient_l2_squared(const TensorField& g) {
  CompensatedSum s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (double v : g[i][j].values()) s.add(v * v);
  return s.value() * g[0].cell_volume();
}

double relative_divergence(const VectorField& f) {
  double div = field_norm(spectral_divergence(f), Norm::Linf);
  double grad = gradient_linf(spectral_gradient(f));
  if (grad == 0.0) return div == 0.0 ? 0.0 : INFINITY;
  return div / grad;
}

double holder_quotient(const ScalarField& f, double alpha) {
  const int n = f.n();
  const double scale = std::pow(f.cell_size(), -alpha);
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = f(i, j, k);
        m = std::max(m, std::abs(f((i + 1) % n, j, k) - v));
        m = std::max(m, std::abs(f(i, (j + 1) % n, k) - v));
        m = std::max(m, std::abs(f(i, j, (k + 1) % n) - v));
      }
  return m * scale;
}

}  // namespace vstokes
