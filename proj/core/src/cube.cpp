#include "vstokes/cube.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace vstokes {

std::vector<std::pair<int, double>> axis_overlap(double corner, double delta, int n,
                                                 double box_length) {
  const double h = box_length / n;
  std::vector<std::pair<int, double>> out;
  const double a = corner;
  const double b = corner + delta;
  const long first = static_cast<long>(std::floor(a / h));
  const long last = static_cast<long>(std::ceil(b / h)) - 1;
  for (long c = first; c <= last; ++c) {
    double lo = std::max(a, c * h);
    double hi = std::min(b, (c + 1) * h);
    if (hi <= lo) continue;
    int idx = static_cast<int>(((c % n) + n) % n);
    out.emplace_back(idx, (hi - lo) / delta);
  }
  return out;
}

namespace {

double weighted_sum(const ScalarField& f, const std::vector<std::pair<int, double>>& wx,
                    const std::vector<std::pair<int, double>>& wy,
                    const std::vector<std::pair<int, double>>& wz) {
  double s = 0.0;
  for (auto [i, a] : wx)
    for (auto [j, b] : wy) {
      double row = 0.0;
      for (auto [k, c] : wz) row += c * f(i, j, k);
      s += a * b * row;
    }
  return s;
}

}  // namespace

double cube_average(const ScalarField& f, const Vec3& corner, double delta) {
  if (delta < 2.0 * f.cell_size()) throw std::invalid_argument("cube under-resolved");
  const int n = f.n();
  const double L = f.box_length();
  return weighted_sum(f, axis_overlap(corner[0], delta, n, L),
                      axis_overlap(corner[1], delta, n, L),
                      axis_overlap(corner[2], delta, n, L));
}

double max_abs_cube_average(const ScalarField& f, double delta, double lattice_spacing) {
  if (delta < 2.0 * f.cell_size()) throw std::invalid_argument("cube under-resolved");
  const int n = f.n();
  const double L = f.box_length();
  const double s = lattice_spacing > 0.0 ? lattice_spacing : 0.5 * f.cell_size();
  const int m = std::max(1, static_cast<int>(std::llround(L / s)));

  // Axis projections of the nonzero set.
  std::array<std::vector<char>, 3> active;
  for (auto& a : active) a.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (f(i, j, k) != 0.0) active[0][i] = active[1][j] = active[2][k] = 1;

  std::array<std::vector<std::vector<std::pair<int, double>>>, 3> stencils;
  for (int axis = 0; axis < 3; ++axis)
    for (int c = 0; c < m; ++c) {
      auto w = axis_overlap(c * (L / m), delta, n, L);
      bool touches = std::any_of(w.begin(), w.end(),
                                 [&](const auto& p) { return active[axis][p.first] != 0; });
      if (touches) stencils[axis].push_back(std::move(w));
    }

  double best = 0.0;
  for (const auto& wx : stencils[0])
    for (const auto& wy : stencils[1])
      for (const auto& wz : stencils[2])
        best = std::max(best, std::abs(weighted_sum(f, wx, wy, wz)));
  return best;
}

}  // namespace vstokes
