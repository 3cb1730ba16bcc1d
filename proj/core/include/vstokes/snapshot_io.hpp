#pragma once

#include <filesystem>

#include "vstokes/ensemble.hpp"

namespace vstokes {

class TracerEnsemble;

/// Ensemble snapshot: `<stem>.f64` holds the columns x, y, z, vx, vy, vz, w
/// one after the other as little-endian float64; `<stem>.json` holds
/// {n_particles, columns, box_length, time}.
void write_snapshot(const std::filesystem::path& stem, const PhaseEnsemble& e, double time);
PhaseEnsemble read_snapshot(const std::filesystem::path& stem, double* time = nullptr);

/// Tracer snapshot with columns x, y, z, rho0, w.
void write_snapshot(const std::filesystem::path& stem, const TracerEnsemble& tr, double time);

}  // namespace vstokes
