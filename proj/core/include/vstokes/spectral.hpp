#pragma once

#include <complex>
#include <vector>

#include "vstokes/field.hpp"

namespace vstokes {

/// Half-spectrum of a real field as produced by a 3-D r2c transform:
/// n x n x (n/2 + 1) coefficients, unnormalised.
struct Spectrum {
  int n = 0;
  double box_length = 0.0;
  std::vector<std::complex<double>> coeff;

  int nz() const { return n / 2 + 1; }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n + j) * nz() + k;
  }
};

Spectrum forward_transform(const ScalarField& f);
/// Inverse transform including the 1/n^3 normalisation.
ScalarField inverse_transform(const Spectrum& s);

/// Angular wavenumber of FFT index idx along one axis; zero at the Nyquist
/// index so that spectral derivatives of real fields stay real.
double wavenumber(int idx, int n, double box_length);
bool is_nyquist(int idx, int n);
/// wavenumber(idx, n, L) for idx = 0 .. n - 1.
std::vector<double> wavenumber_table(int n, double box_length);

/// Fourier-differentiated gradient of a scalar field.
VectorField spectral_gradient(const ScalarField& f);
/// g[i][j] = d f_i / d x_j.
TensorField spectral_gradient(const VectorField& f);
ScalarField spectral_divergence(const VectorField& f);

}  // namespace vstokes
