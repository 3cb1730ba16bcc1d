#include "vstokes/stokes.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vstokes/norms.hpp"
#include "vstokes/spectral.hpp"

namespace vstokes {

namespace {

int signed_mode(int idx, int n) { return idx <= n / 2 ? idx : idx - n; }

}  // namespace

VectorField solve_stokes(const VectorField& force, const StokesOptions& opts) {
  const int n = force.n();
  const double L = force.box_length();
  std::array<Spectrum, 3> f{forward_transform(force[0]), forward_transform(force[1]),
                            forward_transform(force[2])};
  const int nz = f[0].nz();
  const int cut = n / 3;
  const auto kt = wavenumber_table(n, L);
  // keep[idx] is false for the modes the solve zeroes.
  std::vector<char> keep(n);
  for (int i = 0; i < n; ++i)
    keep[i] = !is_nyquist(i, n) && !(opts.dealias && std::abs(signed_mode(i, n)) > cut);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t row = f[0].index(i, j, 0);
      for (int k = 0; k < nz; ++k) {
        const std::size_t idx = row + k;
        if (!keep[i] || !keep[j] || !keep[k] || (i == 0 && j == 0 && k == 0)) {
          for (auto& c : f) c.coeff[idx] = 0.0;
          continue;
        }
        const double kk[3] = {kt[i], kt[j], kt[k]};
        const double inv_k2 = 1.0 / (kk[0] * kk[0] + kk[1] * kk[1] + kk[2] * kk[2]);
        std::complex<double> kf = kk[0] * f[0].coeff[idx] + kk[1] * f[1].coeff[idx] +
                                  kk[2] * f[2].coeff[idx];
        kf *= inv_k2;
        for (int a = 0; a < 3; ++a) f[a].coeff[idx] = (f[a].coeff[idx] - kk[a] * kf) * inv_k2;
      }
    }
  VectorField u(n, L);
  for (int a = 0; a < 3; ++a) u[a] = inverse_transform(f[a]);
  return u;
}

VectorField solve_limit_fluid(const ScalarField& rho_star, const Vec3& g,
                              const StokesOptions& opts) {
  VectorField force(rho_star.n(), rho_star.box_length());
  for (int a = 0; a < 3; ++a) {
    force[a] = rho_star;
    force[a] *= g[a];
  }
  return solve_stokes(force, opts);
}

VectorField intermediate_velocity(const ScalarField& rho_lambda, const Vec3& g,
                                  const StokesOptions& opts) {
  return solve_limit_fluid(rho_lambda, g, opts);
}

BrinkmanNonConvergence::BrinkmanNonConvergence(const BrinkmanSolveReport& r)
    : std::runtime_error("Brinkman iteration did not converge after " +
                         std::to_string(r.iterations) + " iterations (residual " +
                         std::to_string(r.final_residual) + ")"),
      report_(r) {}

BrinkmanResult solve_brinkman(const DragOperator& drag, const VectorField& source,
                              const VectorField& u0, const BrinkmanOptions& opts) {
  if (!u0.same_grid(source)) throw std::invalid_argument("solve_brinkman: grids differ");
  const double theta = opts.damping;
  BrinkmanResult res{u0, {}};
  for (int it = 1; it <= opts.max_iter; ++it) {
    VectorField force = source - drag(res.u);
    VectorField next = axpby(1.0 - theta, res.u, theta, solve_stokes(force, opts.stokes));
    const double change = field_norm(next - res.u, Norm::L2);
    const double size = field_norm(next, Norm::L2);
    res.u = std::move(next);
    res.report.iterations = it;
    res.report.final_residual =
        size > 0.0 ? change / size : (change == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    if (!std::isfinite(res.report.final_residual)) break;
    if (res.report.final_residual <= opts.tol) {
      res.report.converged = true;
      return res;
    }
  }
  throw BrinkmanNonConvergence(res.report);
}

BrinkmanResult solve_brinkman(const ScalarField& rho, const VectorField& vbar, const VectorField& u0,
                              const BrinkmanOptions& opts) {
  if (!vbar.same_grid(rho) || !u0.same_grid(rho))
    throw std::invalid_argument("solve_brinkman: grids differ");
  VectorField source(rho.n(), rho.box_length());
  for (int a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < rho.size(); ++i) source[a][i] = rho[i] * vbar[a][i];
  auto drag = [&rho](const VectorField& u) {
    VectorField d = u;
    for (int a = 0; a < 3; ++a)
      for (std::size_t i = 0; i < rho.size(); ++i) d[a][i] *= rho[i];
    return d;
  };
  return solve_brinkman(drag, source, u0, opts);
}

}  // namespace vstokes
