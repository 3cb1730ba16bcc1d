#include "vstokes/record.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vstokes {

namespace {

// Scalar columns in output order; the d_lambda_delta block goes after
// fluid_identity_residual.
struct Column {
  const char* name;
  double DiagnosticsRecord::*field;
};

constexpr Column kHead[] = {
    {"t", &DiagnosticsRecord::t},
    {"mass", &DiagnosticsRecord::mass},
    {"E", &DiagnosticsRecord::E},
    {"grad_u_L2", &DiagnosticsRecord::grad_u_L2},
    {"u_Linf", &DiagnosticsRecord::u_Linf},
    {"u_W1inf", &DiagnosticsRecord::u_W1inf},
    {"rho_Linf", &DiagnosticsRecord::rho_Linf},
    {"velocity_spread", &DiagnosticsRecord::velocity_spread},
    {"support_radius", &DiagnosticsRecord::support_radius},
    {"energy_identity_residual", &DiagnosticsRecord::energy_identity_residual},
    {"fluid_identity_residual", &DiagnosticsRecord::fluid_identity_residual},
};

constexpr Column kTail[] = {
    {"err_u_vs_ustar_W1inf", &DiagnosticsRecord::err_u_vs_ustar_W1inf},
    {"err_u_vs_utilde_W1inf", &DiagnosticsRecord::err_u_vs_utilde_W1inf},
    {"err_rho_Linf", &DiagnosticsRecord::err_rho_Linf},
    {"eta_traj", &DiagnosticsRecord::eta_traj},
    {"energy_identity_residual_raw", &DiagnosticsRecord::energy_identity_residual_raw},
    {"mass_star", &DiagnosticsRecord::mass_star},
    {"div_u", &DiagnosticsRecord::div_u},
    {"div_u_star", &DiagnosticsRecord::div_u_star},
    {"div_u_tilde", &DiagnosticsRecord::div_u_tilde},
    {"u_dot_j", &DiagnosticsRecord::u_dot_j},
    {"u_rho_sq", &DiagnosticsRecord::u_rho_sq},
    {"vbar_rho_sq", &DiagnosticsRecord::vbar_rho_sq},
    {"grad_u_Linf", &DiagnosticsRecord::grad_u_Linf},
    {"err_rho_holder", &DiagnosticsRecord::err_rho_holder},
};

constexpr const char* kDeltaPrefix = "d_lambda_delta_";

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

bool DiagnosticsRecord::all_finite() const {
  for (const auto& c : kHead)
    if (!std::isfinite(this->*c.field)) return false;
  for (const auto& c : kTail)
    if (!std::isfinite(this->*c.field)) return false;
  for (double d : d_lambda_delta)
    if (!std::isfinite(d)) return false;
  return true;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> csv_header(std::span<const double> deltas) {
  std::vector<std::string> h;
  for (const auto& c : kHead) h.emplace_back(c.name);
  for (double d : deltas) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", d);
    h.push_back(std::string(kDeltaPrefix) + buf);
  }
  for (const auto& c : kTail) h.emplace_back(c.name);
  h.emplace_back("brinkman_iterations");
  return h;
}

void write_csv_header(std::ostream& os, std::span<const double> deltas) {
  auto h = csv_header(deltas);
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << '\n';
}

void write_csv_row(std::ostream& os, const DiagnosticsRecord& r) {
  bool first = true;
  auto put = [&](const std::string& s) {
    os << (first ? "" : ",") << s;
    first = false;
  };
  for (const auto& c : kHead) put(format_double(r.*c.field));
  for (double d : r.d_lambda_delta) put(format_double(d));
  for (const auto& c : kTail) put(format_double(r.*c.field));
  put(std::to_string(r.brinkman_iterations));
  os << '\n';
}

void write_csv(std::ostream& os, std::span<const DiagnosticsRecord> records,
               std::span<const double> deltas) {
  write_csv_header(os, deltas);
  for (const auto& r : records) {
    if (r.d_lambda_delta.size() != deltas.size())
      throw std::invalid_argument("write_csv: record delta count differs from header");
    write_csv_row(os, r);
  }
}

std::vector<DiagnosticsRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: missing header");
  const auto header = split(line);
  std::size_t n_delta = 0;
  for (const auto& h : header)
    if (h.rfind(kDeltaPrefix, 0) == 0) ++n_delta;
  const std::size_t expected = std::size(kHead) + n_delta + std::size(kTail) + 1;
  if (header.size() != expected) throw std::runtime_error("read_csv: unexpected column count");
  std::vector<DiagnosticsRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != expected) throw std::runtime_error("read_csv: ragged row");
    DiagnosticsRecord r;
    std::size_t c = 0;
    for (const auto& col : kHead) r.*col.field = std::stod(cells[c++]);
    for (std::size_t d = 0; d < n_delta; ++d) r.d_lambda_delta.push_back(std::stod(cells[c++]));
    for (const auto& col : kTail) r.*col.field = std::stod(cells[c++]);
    r.brinkman_iterations = std::stoi(cells[c]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vstokes
