#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vstokes/types.hpp"

namespace vstokes {

/// Weighted Lagrangian particles (x_i, v_i, w_i) sampling f(t, x, v).
///
/// Positions are kept reduced into [0, L)^3; an unwrapped copy accumulates
/// the displacement history so trajectories can be compared across the
/// periodic boundary. Weights are fixed at construction and shared between
/// copies, so mass is conserved structurally.
class PhaseEnsemble {
 public:
  PhaseEnsemble() = default;
  PhaseEnsemble(double box_length, std::vector<Vec3> positions, std::vector<Vec3> velocities,
                std::vector<double> weights);

  std::size_t size() const { return velocities_.size(); }
  bool empty() const { return velocities_.empty(); }
  double box_length() const { return box_length_; }

  std::span<const Vec3> positions() const { return positions_; }
  std::span<const Vec3> unwrapped_positions() const { return unwrapped_; }
  std::span<const Vec3> velocities() const { return velocities_; }
  std::span<const double> weights() const { return *weights_; }
  double total_weight() const;

  /// Moves particle i to the unwrapped position x with velocity v.
  void set_state(std::size_t i, const Vec3& unwrapped_x, const Vec3& v) {
    unwrapped_[i] = unwrapped_x;
    positions_[i] = wrap_position(unwrapped_x, box_length_);
    velocities_[i] = v;
  }
  void set_velocity(std::size_t i, const Vec3& v) { velocities_[i] = v; }

 private:
  double box_length_ = 0.0;
  std::vector<Vec3> positions_;
  std::vector<Vec3> unwrapped_;
  std::vector<Vec3> velocities_;
  std::shared_ptr<const std::vector<double>> weights_ = std::make_shared<std::vector<double>>();
};

}  // namespace vstokes
