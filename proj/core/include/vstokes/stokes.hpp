#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "vstokes/field.hpp"

namespace vstokes {

struct StokesOptions {
  /// Zero every mode with |m_a| > n/3 on some axis (2/3 rule).
  bool dealias = false;
};

/// Periodic Stokes solve -Lap u + grad p = f, div u = 0, via
/// u_hat(k) = (I - k k^T / |k|^2) f_hat(k) / |k|^2. The mean force (k = 0)
/// is removed and the solution is mean free; Nyquist modes are zeroed.
VectorField solve_stokes(const VectorField& force, const StokesOptions& opts = {});

/// Stokes velocity driven by g * rho (the inertialess fluid equation).
VectorField solve_limit_fluid(const ScalarField& rho_star, const Vec3& g,
                              const StokesOptions& opts = {});

/// Same operator as solve_limit_fluid, applied to the kinetic density.
VectorField intermediate_velocity(const ScalarField& rho_lambda, const Vec3& g,
                                  const StokesOptions& opts = {});

struct BrinkmanOptions {
  double tol = 1e-9;
  int max_iter = 200;
  /// Picard damping theta in u <- (1 - theta) u + theta S(rho (V - u)).
  double damping = 0.7;
  StokesOptions stokes{};
};

struct BrinkmanSolveReport {
  int iterations = 0;
  /// Relative L2 size of the last Picard update, i.e. theta times the
  /// Stokes-preconditioned residual of -Lap u + grad p + rho (u - V).
  double final_residual = 0.0;
  bool converged = false;
};

class BrinkmanNonConvergence : public std::runtime_error {
 public:
  explicit BrinkmanNonConvergence(const BrinkmanSolveReport& r);
  const BrinkmanSolveReport& report() const { return report_; }

 private:
  BrinkmanSolveReport report_;
};

struct BrinkmanResult {
  VectorField u;
  BrinkmanSolveReport report;
};

/// Linear drag operator D of the Brinkman problem -Lap u + grad p + D(u) = s.
using DragOperator = std::function<VectorField(const VectorField&)>;

/// Damped Picard iteration u <- (1 - theta) u + theta S(s - D(u)) from u0.
/// Throws BrinkmanNonConvergence if the relative update does not drop below
/// opts.tol within opts.max_iter iterations.
BrinkmanResult solve_brinkman(const DragOperator& drag, const VectorField& source,
                              const VectorField& u0, const BrinkmanOptions& opts = {});

/// Grid form D(u) = rho u, s = rho vbar, i.e.
/// -Lap u + grad p + rho (u - vbar) = 0.
BrinkmanResult solve_brinkman(const ScalarField& rho, const VectorField& vbar, const VectorField& u0,
                              const BrinkmanOptions& opts = {});

}  // namespace vstokes
