#include "vstokes/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace vstokes {

namespace {

// FFTW's planner is not thread safe; execution of a plan on its own buffers
// is only safe from one thread at a time, so plans live in a thread-local
// cache and planning is serialised.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Fft3d {
 public:
  explicit Fft3d(int n) : n_(n), real_size_(static_cast<std::size_t>(n) * n * n),
                          complex_size_(static_cast<std::size_t>(n) * n * (n / 2 + 1)) {
    real_ = fftw_alloc_real(real_size_);
    cplx_ = fftw_alloc_complex(complex_size_);
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE keeps plan selection (and hence rounding) independent of
    // timing measurements.
    fwd_ = fftw_plan_dft_r2c_3d(n, n, n, real_, cplx_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_3d(n, n, n, cplx_, real_, FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw std::runtime_error("FFTW planning failed");
  }
  ~Fft3d() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(cplx_);
  }
  Fft3d(const Fft3d&) = delete;
  Fft3d& operator=(const Fft3d&) = delete;

  void forward(const double* in, std::complex<double>* out) {
    std::copy(in, in + real_size_, real_);
    fftw_execute(fwd_);
    auto* c = reinterpret_cast<std::complex<double>*>(cplx_);
    std::copy(c, c + complex_size_, out);
  }

  void inverse(const std::complex<double>* in, double* out) {
    auto* c = reinterpret_cast<std::complex<double>*>(cplx_);
    std::copy(in, in + complex_size_, c);
    fftw_execute(inv_);
    const double scale = 1.0 / static_cast<double>(real_size_);
    for (std::size_t i = 0; i < real_size_; ++i) out[i] = real_[i] * scale;
  }

 private:
  int n_;
  std::size_t real_size_;
  std::size_t complex_size_;
  double* real_ = nullptr;
  fftw_complex* cplx_ = nullptr;
  fftw_plan fwd_ = nullptr;
  fftw_plan inv_ = nullptr;
};

Fft3d& transform_for(int n) {
  thread_local std::map<int, std::unique_ptr<Fft3d>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Fft3d>(n);
  return *slot;
}

}  // namespace

bool is_nyquist(int idx, int n) { return n % 2 == 0 && idx == n / 2; }

double wavenumber(int idx, int n, double box_length) {
  if (is_nyquist(idx, n)) return 0.0;
  int m = idx <= n / 2 ? idx : idx - n;
  return 2.0 * std::numbers::pi * m / box_length;
}

std::vector<double> wavenumber_table(int n, double box_length) {
  std::vector<double> k(n);
  for (int i = 0; i < n; ++i) k[i] = wavenumber(i, n, box_length);
  return k;
}

Spectrum forward_transform(const ScalarField& f) {
  Spectrum s;
  s.n = f.n();
  s.box_length = f.box_length();
  s.coeff.resize(static_cast<std::size_t>(s.n) * s.n * s.nz());
  transform_for(f.n()).forward(f.data(), s.coeff.data());
  return s;
}

ScalarField inverse_transform(const Spectrum& s) {
  ScalarField f(s.n, s.box_length);
  transform_for(s.n).inverse(s.coeff.data(), f.data());
  return f;
}

namespace {

// Multiplies by i k_axis.
Spectrum differentiate(const Spectrum& s, int axis) {
  Spectrum d = s;
  const int n = s.n;
  const int nz = s.nz();
  const auto kt = wavenumber_table(n, s.box_length);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double>* row = d.coeff.data() + s.index(i, j, 0);
      for (int k = 0; k < nz; ++k) {
        const double ka = axis == 0 ? kt[i] : (axis == 1 ? kt[j] : kt[k]);
        row[k] = {-ka * row[k].imag(), ka * row[k].real()};
      }
    }
  return d;
}

}  // namespace

VectorField spectral_gradient(const ScalarField& f) {
  Spectrum s = forward_transform(f);
  VectorField g(f.n(), f.box_length());
  for (int a = 0; a < 3; ++a) g[a] = inverse_transform(differentiate(s, a));
  return g;
}

TensorField spectral_gradient(const VectorField& f) {
  TensorField g;
  for (int c = 0; c < 3; ++c) g[c] = spectral_gradient(f[c]);
  return g;
}

ScalarField spectral_divergence(const VectorField& f) {
  Spectrum total = forward_transform(f[0]);
  total = differentiate(total, 0);
  for (int a = 1; a < 3; ++a) {
    Spectrum d = differentiate(forward_transform(f[a]), a);
    for (std::size_t i = 0; i < total.coeff.size(); ++i) total.coeff[i] += d.coeff[i];
  }
  return inverse_transform(total);
}

}  // namespace vstokes
