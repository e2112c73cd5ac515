#pragma once

#include <vector>

#include "haplo/manifold.hpp"
#include "haplo/types.hpp"

namespace haplo::objective {

/// Residuals e_ij = r_ij - gamma1 * atan(gamma2 * x_ij) over Omega, aligned
/// with rm.entries().  Because gamma1 < 2/pi and r_ij = +/-1, every residual
/// satisfies |e_ij| >= 1 - gamma1*pi/2 > 0.
std::vector<double> residuals(const ReadMatrix& rm, const RankOneFactors& x,
                              const SolverConfig& cfg);

/// Smoothed error-correction cost
///   f(X) = sum_{(i,j) in Omega} |r_ij - gamma1 * atan(gamma2 * x_ij)|^p
/// with x_ij = sigma * u_i * v_j evaluated in factored form.
double cost(const ReadMatrix& rm, const RankOneFactors& x,
            const SolverConfig& cfg);

/// Same cost evaluated at an arbitrary dense matrix (not restricted to the
/// manifold); used by finite-difference checks.
double cost_dense(const ReadMatrix& rm, const MatrixXd& a,
                  const SolverConfig& cfg);

/// Euclidean gradient of `cost`: zero off Omega and
///   G_ij = -p |e_ij|^(p-1) sign(e_ij) gamma1 gamma2 / (1 + (gamma2 x_ij)^2)
/// on Omega.
MatrixXd euclidean_gradient(const ReadMatrix& rm, const RankOneFactors& x,
                            const SolverConfig& cfg);

/// Per-entry values of the Euclidean gradient over Omega, aligned with
/// rm.entries().
std::vector<double> euclidean_gradient_values(const ReadMatrix& rm,
                                              const RankOneFactors& x,
                                              const SolverConfig& cfg);

/// Riemannian gradient: the tangent-space projection of the Euclidean
/// gradient, computed without materializing the dense matrix.
TangentVector riemannian_gradient(const ReadMatrix& rm,
                                  const RankOneFactors& x,
                                  const SolverConfig& cfg);

}  // namespace haplo::objective
