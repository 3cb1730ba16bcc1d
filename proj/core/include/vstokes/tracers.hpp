#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vstokes/ensemble.hpp"
#include "vstokes/field.hpp"
#include "vstokes/initial_data.hpp"

namespace vstokes {

/// Lagrangian tracers for the transport equation d_t rho + (g + u) . grad rho = 0.
/// Each tracer carries the initial density at its starting point, which is
/// constant along the divergence-free characteristic, and a deposition
/// weight. Both are immutable.
class TracerEnsemble {
 public:
  TracerEnsemble() = default;
  TracerEnsemble(double box_length, std::vector<Vec3> positions, std::vector<double> carried_density,
                 std::vector<double> weights);

  /// Tracers at the initial positions of a kinetic ensemble, paired by index,
  /// with the same weights.
  static TracerEnsemble from_ensemble(const PhaseEnsemble& e, const InitialData& init);

  /// Tracers on a cubic lattice of the given spacing over the support of
  /// rho_0, with weights rho_0(x0) V0 / M rescaled to unit total mass.
  static TracerEnsemble on_lattice(const InitialData& init, double spacing, double box_length);

  std::size_t size() const { return positions_.size(); }
  double box_length() const { return box_length_; }
  std::span<const Vec3> positions() const { return positions_; }
  std::span<const Vec3> unwrapped_positions() const { return unwrapped_; }
  std::span<const double> carried_density() const { return *density_; }
  std::span<const double> weights() const { return *weights_; }
  double total_weight() const;

  void set_position(std::size_t i, const Vec3& unwrapped_x) {
    unwrapped_[i] = unwrapped_x;
    positions_[i] = wrap_position(unwrapped_x, box_length_);
  }

 private:
  double box_length_ = 0.0;
  std::vector<Vec3> positions_;
  std::vector<Vec3> unwrapped_;
  std::shared_ptr<const std::vector<double>> density_ = std::make_shared<std::vector<double>>();
  std::shared_ptr<const std::vector<double>> weights_ = std::make_shared<std::vector<double>>();
};

/// Classical RK4 on x' = g + u*(x) with u* frozen over the step.
void advect_in_place(TracerEnsemble& tr, const VectorField& u_star, const Vec3& g, double dt,
                     int threads = 1);
TracerEnsemble advect(TracerEnsemble tr, const VectorField& u_star, const Vec3& g, double dt,
                      int threads = 1);

/// Largest per-axis extent of the unwrapped tracer cloud.
double max_axis_extent(std::span<const Vec3> unwrapped);

}  // namespace vstokes
