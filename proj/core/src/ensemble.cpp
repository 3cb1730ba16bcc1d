#include "vstokes/ensemble.hpp"

#include <stdexcept>

#include "vstokes/summation.hpp"

namespace vstokes {

PhaseEnsemble::PhaseEnsemble(double box_length, std::vector<Vec3> positions,
                             std::vector<Vec3> velocities, std::vector<double> weights)
    : box_length_(box_length),
      unwrapped_(std::move(positions)),
      velocities_(std::move(velocities)) {
  if (unwrapped_.size() != velocities_.size() || velocities_.size() != weights.size())
    throw std::invalid_argument("PhaseEnsemble: positions, velocities and weights differ in length");
  if (!(box_length > 0.0)) throw std::invalid_argument("PhaseEnsemble: box_length must be positive");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("PhaseEnsemble: weights must be positive");
  positions_.reserve(unwrapped_.size());
  for (const auto& x : unwrapped_) positions_.push_back(wrap_position(x, box_length_));
  weights_ = std::make_shared<const std::vector<double>>(std::move(weights));
}

double PhaseEnsemble::total_weight() const {
  CompensatedSum s;
  for (double w : *weights_) s.add(w);
  return s.value();
}

}  // namespace vstokes
