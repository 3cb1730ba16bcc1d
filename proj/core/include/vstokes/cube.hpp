#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "vstokes/field.hpp"

namespace vstokes {

/// Per-axis overlap of the periodic interval [corner, corner + delta) with
/// the grid cells, as (cell index, overlap length / delta) pairs.
std::vector<std::pair<int, double>> axis_overlap(double corner, double delta, int n,
                                                 double box_length);

/// Volume average of f over the axis-aligned cube [corner, corner + delta)^3
/// using exact cell overlap weights. Throws std::invalid_argument
/// ("cube under-resolved") when delta < 2h.
double cube_average(const ScalarField& f, const Vec3& corner, double delta);

/// sup over cubes of side delta with corners on a lattice of the given
/// spacing of |cube_average(f)|. Only corners whose cube can touch the
/// nonzero set of f are visited.
double max_abs_cube_average(const ScalarField& f, double delta, double lattice_spacing);

}  // namespace vstokes
