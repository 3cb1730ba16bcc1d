#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vstokes {

/// Per-time diagnostics of a coupled kinetic / limit run.
///
/// The leading columns follow the documented DiagnosticsRecord order; the
/// trailing block carries the auxiliary quantities the acceptance checks
/// need (divergences, the fluid energy chain, ||grad u||_inf for M(t), and
/// solver iteration counts).
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double E = 0.0;
  double grad_u_L2 = 0.0;
  double u_Linf = 0.0;
  double u_W1inf = 0.0;
  double rho_Linf = 0.0;
  double velocity_spread = 0.0;
  double support_radius = 0.0;
  double energy_identity_residual = 0.0;
  double fluid_identity_residual = 0.0;
  std::vector<double> d_lambda_delta;
  double err_u_vs_ustar_W1inf = 0.0;
  double err_u_vs_utilde_W1inf = 0.0;
  double err_rho_Linf = 0.0;
  double eta_traj = 0.0;

  double energy_identity_residual_raw = 0.0;
  double mass_star = 0.0;
  double div_u = 0.0;
  double div_u_star = 0.0;
  double div_u_tilde = 0.0;
  double u_dot_j = 0.0;
  double u_rho_sq = 0.0;
  double vbar_rho_sq = 0.0;
  double grad_u_Linf = 0.0;
  double err_rho_holder = 0.0;
  int brinkman_iterations = 0;

  bool all_finite() const;
};

std::vector<std::string> csv_header(std::span<const double> deltas);

/// %.17g formatting so that values round-trip exactly.
std::string format_double(double x);

void write_csv_header(std::ostream& os, std::span<const double> deltas);
void write_csv_row(std::ostream& os, const DiagnosticsRecord& r);
void write_csv(std::ostream& os, std::span<const DiagnosticsRecord> records,
               std::span<const double> deltas);

/// Parses a file written by write_csv (the delta list is read from the header).
std::vector<DiagnosticsRecord> read_csv(std::istream& is);

}  // namespace vstokes
