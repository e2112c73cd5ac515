#pragma once

#include <vector>

#include "haplo/solver.hpp"
#include "haplo/types.hpp"

namespace haplo::baselines {

struct AltMinResult {
  VectorXd u;
  VectorXd v;
  int iterations = 0;
  double objective = 0.0;  // ||P_Omega(R) - P_Omega(u v^T)||_F^2 at the end
  std::vector<double> objective_trace;  // initial value, then one per sweep
};

/// Alternating least-squares factorization of P_Omega(R) into u v^T with
/// closed-form row/column updates, initialized from the rank-one
/// approximation of P_Omega(R).  Requires every row and column to carry at
/// least one observation (EmptyRowOrColumnError otherwise); throws
/// DegenerateUpdateError when an update denominator collapses below 1e-14.
AltMinResult altmin_factorize(const ReadMatrix& rm, int max_iters = 500,
                              double rel_tol = 1e-8);

/// Frobenius cost ||P_Omega(R) - P_Omega(X)||_F^2 over Omega.
double frobenius_cost(const ReadMatrix& rm, const RankOneFactors& x);

/// Euclidean gradient of the Frobenius cost: -2 (r_ij - x_ij) on Omega.
MatrixXd frobenius_euclidean_gradient(const ReadMatrix& rm,
                                      const RankOneFactors& x);

/// Riemannian descent with the Frobenius cost: identical machinery to
/// solver::solve (same Armijo loop, retraction and haplotype extraction)
/// with the quadratic cost swapped in.  No admissibility guard applies.
solver::SolveResult frobenius_manifold_solve(const ReadMatrix& rm,
                                             const SolverConfig& cfg);

}  // namespace haplo::baselines
