#pragma once

#include "vstokes/field.hpp"

namespace vstokes {

/// Discrete norms: cell sums times h^3 for L1/L2, maximum over nodes for
/// Linf, Linf of the value plus Linf of the spectral gradient for W1inf.
/// Vector fields use the Euclidean norm per node and gradients the
/// Frobenius norm per node.
enum class Norm { L1, L2, Linf, W1inf };

double field_norm(const ScalarField& f, Norm which);
double field_norm(const VectorField& f, Norm which);

/// ||f||_{L^2_rho} = (h^3 sum rho |f|^2)^{1/2}.
double weighted_l2_norm(const VectorField& f, const ScalarField& rho);
double weighted_l2_norm(const ScalarField& f, const ScalarField& rho);

/// (f, g)_{L^2} = h^3 sum f . g.
double inner_product(const VectorField& f, const VectorField& g);

/// Max over nodes of the Frobenius norm of the gradient tensor.
double gradient_linf(const TensorField& g);
/// ||grad f||_{L^2}^2 = h^3 sum |g_ij|^2.
double gradient_l2_squared(const TensorField& g);

/// Relative spectral divergence max|div f| / max(||grad f||_inf, tiny).
double relative_divergence(const VectorField& f);

/// Fixed-scale finite-difference Holder quotient
/// max over nodes and axes of |f(x + h e_a) - f(x)| / h^alpha.
double holder_quotient(const ScalarField& f, double alpha);

}  // namespace vstokes
