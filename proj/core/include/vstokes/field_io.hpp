#pragma once

#include <filesystem>
#include <string>

#include "vstokes/field.hpp"

namespace vstokes {

/// Field dump: `<stem>.f64` holds raw little-endian float64 values, row-major
/// within a component, components one after the other; `<stem>.json` holds
/// {grid_n, box_length, components, time}.
void write_field(const std::filesystem::path& stem, const ScalarField& f, double time);
void write_field(const std::filesystem::path& stem, const VectorField& f, double time);

ScalarField read_scalar_field(const std::filesystem::path& stem, double* time = nullptr);
VectorField read_vector_field(const std::filesystem::path& stem, double* time = nullptr);

/// Writes doubles little-endian regardless of host byte order.
void write_f64(const std::filesystem::path& file, const std::vector<double>& data);
std::vector<double> read_f64(const std::filesystem::path& file);

}  // namespace vstokes
