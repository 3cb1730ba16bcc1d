#include "vstokes/snapshot_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "vstokes/field_io.hpp"
#include "vstokes/tracers.hpp"

namespace vstokes {

namespace {

std::filesystem::path with_ext(const std::filesystem::path& stem, const char* ext) {
  return std::filesystem::path(stem.string() + ext);
}

void write_columns(const std::filesystem::path& stem, const std::vector<std::vector<double>>& cols,
                   const std::vector<std::string>& names, double box_length, double time) {
  std::vector<double> data;
  data.reserve(cols.size() * (cols.empty() ? 0 : cols[0].size()));
  for (const auto& c : cols) data.insert(data.end(), c.begin(), c.end());
  write_f64(with_ext(stem, ".f64"), data);
  nlohmann::json meta{{"n_particles", cols.empty() ? 0 : cols[0].size()},
                      {"columns", names},
                      {"box_length", box_length},
                      {"time", time}};
  std::ofstream out(with_ext(stem, ".json"));
  if (!out) throw std::runtime_error("cannot write " + with_ext(stem, ".json").string());
  out << meta.dump(2) << '\n';
}

}  // namespace

void write_snapshot(const std::filesystem::path& stem, const PhaseEnsemble& e, double time) {
  const std::size_t n = e.size();
  std::vector<std::vector<double>> cols(7, std::vector<double>(n));
  auto xs = e.positions();
  auto vs = e.velocities();
  auto ws = e.weights();
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < 3; ++a) {
      cols[a][i] = xs[i][a];
      cols[3 + a][i] = vs[i][a];
    }
    cols[6][i] = ws[i];
  }
  write_columns(stem, cols, {"x", "y", "z", "vx", "vy", "vz", "w"}, e.box_length(), time);
}

void write_snapshot(const std::filesystem::path& stem, const TracerEnsemble& tr, double time) {
  const std::size_t n = tr.size();
  std::vector<std::vector<double>> cols(5, std::vector<double>(n));
  auto xs = tr.positions();
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < 3; ++a) cols[a][i] = xs[i][a];
    cols[3][i] = tr.carried_density()[i];
    cols[4][i] = tr.weights()[i];
  }
  write_columns(stem, cols, {"x", "y", "z", "rho0", "w"}, tr.box_length(), time);
}

PhaseEnsemble read_snapshot(const std::filesystem::path& stem, double* time) {
  std::ifstream in(with_ext(stem, ".json"));
  if (!in) throw std::runtime_error("cannot read " + with_ext(stem, ".json").string());
  auto meta = nlohmann::json::parse(in);
  const auto n = meta.at("n_particles").get<std::size_t>();
  if (meta.at("columns").size() != 7) throw std::runtime_error("not an ensemble snapshot");
  auto data = read_f64(with_ext(stem, ".f64"));
  if (data.size() != 7 * n) throw std::runtime_error("snapshot size mismatch");
  std::vector<Vec3> x(n), v(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 0; a < 3; ++a) {
      x[i][a] = data[a * n + i];
      v[i][a] = data[(3 + a) * n + i];
    }
    w[i] = data[6 * n + i];
  }
  if (time) *time = meta.at("time").get<double>();
  return PhaseEnsemble(meta.at("box_length").get<double>(), std::move(x), std::move(v),
                       std::move(w));
}

}  // namespace vstokes
