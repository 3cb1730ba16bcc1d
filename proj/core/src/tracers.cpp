#include "vstokes/tracers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vstokes/deposit.hpp"
#include "vstokes/parallel.hpp"
#include "vstokes/summation.hpp"

namespace vstokes {

TracerEnsemble::TracerEnsemble(double box_length, std::vector<Vec3> positions,
                               std::vector<double> carried_density, std::vector<double> weights)
    : box_length_(box_length) {
  if (!(box_length > 0.0)) throw std::invalid_argument("tracers: box length must be positive");
  if (positions.size() != carried_density.size() || positions.size() != weights.size())
    throw std::invalid_argument("tracers: column lengths differ");
  unwrapped_ = positions;
  positions_.reserve(positions.size());
  for (const auto& x : positions) positions_.push_back(wrap_position(x, box_length));
  density_ = std::make_shared<const std::vector<double>>(std::move(carried_density));
  weights_ = std::make_shared<const std::vector<double>>(std::move(weights));
}

TracerEnsemble TracerEnsemble::from_ensemble(const PhaseEnsemble& e, const InitialData& init) {
  std::vector<Vec3> x(e.unwrapped_positions().begin(), e.unwrapped_positions().end());
  std::vector<double> rho0(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rho0[i] = init.position_density(x[i]);
  return TracerEnsemble(e.box_length(), std::move(x), std::move(rho0),
                        std::vector<double>(e.weights().begin(), e.weights().end()));
}

TracerEnsemble TracerEnsemble::on_lattice(const InitialData& init, double spacing,
                                          double box_length) {
  if (!(spacing > 0.0)) throw std::invalid_argument("tracers: lattice spacing must be positive");
  const int m = static_cast<int>(std::ceil(2.0 * init.radius_x / spacing));
  const Vec3 origin = init.center_x - Vec3::Constant(0.5 * m * spacing);
  std::vector<Vec3> x;
  std::vector<double> rho0, w;
  CompensatedSum total;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Vec3 p = origin + spacing * Vec3(i + 0.5, j + 0.5, k + 0.5);
        double r = init.position_density(p);
        if (r <= 0.0) continue;
        x.push_back(p);
        rho0.push_back(r);
        w.push_back(r);
        total.add(r);
      }
  if (x.empty()) throw std::invalid_argument("tracers: lattice misses the support");
  for (double& wi : w) wi /= total.value();
  return TracerEnsemble(box_length, std::move(x), std::move(rho0), std::move(w));
}

double TracerEnsemble::total_weight() const {
  CompensatedSum s;
  for (double w : *weights_) s.add(w);
  return s.value();
}

void advect_in_place(TracerEnsemble& tr, const VectorField& u_star, const Vec3& g, double dt,
                     int threads) {
  auto xs = tr.unwrapped_positions();
  auto vel = [&](const Vec3& x) { return Vec3(g + interpolate(u_star, x)); };
  parallel_chunks(tr.size(), threads, [&](int, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const Vec3 x = xs[i];
      Vec3 k1 = vel(x);
      Vec3 k2 = vel(x + 0.5 * dt * k1);
      Vec3 k3 = vel(x + 0.5 * dt * k2);
      Vec3 k4 = vel(x + dt * k3);
      tr.set_position(i, x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    }
  });
}

TracerEnsemble advect(TracerEnsemble tr, const VectorField& u_star, const Vec3& g, double dt,
                      int threads) {
  advect_in_place(tr, u_star, g, dt, threads);
  return tr;
}

double max_axis_extent(std::span<const Vec3> unwrapped) {
  if (unwrapped.empty()) return 0.0;
  Vec3 lo = unwrapped[0], hi = unwrapped[0];
  for (const auto& x : unwrapped) {
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
  return (hi - lo).maxCoeff();
}

}  // namespace vstokes
