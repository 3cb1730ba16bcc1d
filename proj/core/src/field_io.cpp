#include "vstokes/field_io.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace vstokes {

namespace {

std::filesystem::path with_ext(const std::filesystem::path& stem, const char* ext) {
  return std::filesystem::path(stem.string() + ext);
}

void write_meta(const std::filesystem::path& stem, int n, double L, int components,
                double time) {
  nlohmann::json j{{"grid_n", n}, {"box_length", L}, {"components", components},
                   {"time", time}};
  std::ofstream out(with_ext(stem, ".json"));
  if (!out) throw std::runtime_error("cannot write " + with_ext(stem, ".json").string());
  out << j.dump(2) << '\n';
}

nlohmann::json read_meta(const std::filesystem::path& stem) {
  std::ifstream in(with_ext(stem, ".json"));
  if (!in) throw std::runtime_error("cannot read " + with_ext(stem, ".json").string());
  return nlohmann::json::parse(in);
}

}  // namespace

void write_f64(const std::filesystem::path& file, const std::vector<double>& data) {
  std::vector<unsigned char> bytes(data.size() * 8);
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto bits = std::bit_cast<std::uint64_t>(data[i]);
    for (int b = 0; b < 8; ++b) bytes[i * 8 + b] = static_cast<unsigned char>(bits >> (8 * b));
  }
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<double> read_f64(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() % 8 != 0) throw std::runtime_error("truncated f64 file " + file.string());
  std::vector<double> out(bytes.size() / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[i * 8 + b]) << (8 * b);
    out[i] = std::bit_cast<double>(bits);
  }
  return out;
}

void write_field(const std::filesystem::path& stem, const ScalarField& f, double time) {
  write_f64(with_ext(stem, ".f64"), std::vector<double>(f.values().begin(), f.values().end()));
  write_meta(stem, f.n(), f.box_length(), 1, time);
}

void write_field(const std::filesystem::path& stem, const VectorField& f, double time) {
  std::vector<double> data;
  data.reserve(3 * f.size());
  for (int c = 0; c < 3; ++c) data.insert(data.end(), f[c].values().begin(), f[c].values().end());
  write_f64(with_ext(stem, ".f64"), data);
  write_meta(stem, f.n(), f.box_length(), 3, time);
}

ScalarField read_scalar_field(const std::filesystem::path& stem, double* time) {
  auto meta = read_meta(stem);
  if (meta.at("components").get<int>() != 1) throw std::runtime_error("not a scalar field");
  ScalarField f(meta.at("grid_n").get<int>(), meta.at("box_length").get<double>());
  auto data = read_f64(with_ext(stem, ".f64"));
  if (data.size() != f.size()) throw std::runtime_error("field size mismatch");
  std::copy(data.begin(), data.end(), f.data());
  if (time) *time = meta.at("time").get<double>();
  return f;
}

VectorField read_vector_field(const std::filesystem::path& stem, double* time) {
  auto meta = read_meta(stem);
  if (meta.at("components").get<int>() != 3) throw std::runtime_error("not a vector field");
  VectorField f(meta.at("grid_n").get<int>(), meta.at("box_length").get<double>());
  auto data = read_f64(with_ext(stem, ".f64"));
  if (data.size() != 3 * f.size()) throw std::runtime_error("field size mismatch");
  for (int c = 0; c < 3; ++c)
    std::copy(data.begin() + c * f.size(), data.begin() + (c + 1) * f.size(), f[c].data());
  if (time) *time = meta.at("time").get<double>();
  return f;
}

}  // namespace vstokes
