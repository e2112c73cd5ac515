#pragma once

#include <span>

#include "haplo/types.hpp"

namespace haplo::manifold {

/// Diagnostics of a dominant-triplet computation.
struct TripletDiagnostics {
  int iterations = 0;           // power-iteration sweeps used
  bool degenerate = false;      // sigma2 ~ sigma1 (retraction not unique)
  double sigma2_ratio = 0.0;    // probe estimate of sigma2 / sigma1
  bool restarted = false;       // fell back to the seeded random start
};

/// Dominant singular triplet of a dense matrix by power iteration on the
/// smaller Gram side, deterministic all-ones start.  A fixed seeded random
/// start is used as a fallback when the all-ones vector fails to converge or
/// lands on a non-dominant triplet (detected by the deflation probe).
///
/// `start_hint`, when nonempty, seeds the iteration with a caller-supplied
/// left vector instead of all-ones (used by retraction to warm-start from
/// the current point; the result is still a deterministic function of the
/// inputs).
///
/// Throws ZeroMatrixError if `a` is identically zero and NoConvergenceError
/// if the residual tolerance cannot be met within max_iters sweeps.
RankOneFactors top_singular_triplet(const MatrixXd& a, double tol = 1e-10,
                                    int max_iters = 5000,
                                    TripletDiagnostics* diag = nullptr,
                                    const VectorXd* start_hint = nullptr);

/// Orthogonal projection of an ambient matrix g onto the tangent space at x:
///   M = u^T g v,  U_p = (g - u u^T g) v,  V_p = (g^T - v v^T g^T) u.
TangentVector project_tangent(const RankOneFactors& x, const MatrixXd& g);

/// Same projection for a matrix supported on Omega, given the gradient value
/// per observed entry (aligned with rm.entries()).  Avoids forming the dense
/// matrix; used on the solver hot path.
TangentVector project_tangent_sparse(const RankOneFactors& x,
                                     const ReadMatrix& rm,
                                     std::span<const double> values);

/// Riemannian metric tr(xi^T eta) evaluated in factored form:
///   M_xi M_eta + u_p_xi^T u_p_eta + v_p_xi^T v_p_eta.
double inner(const RankOneFactors& x, const TangentVector& xi,
             const TangentVector& eta);

/// Norm induced by `inner`.
double norm(const RankOneFactors& x, const TangentVector& xi);

/// Retraction onto the manifold: forms Y = X + xi densely and truncates to
/// the dominant singular triplet.  retract(x, 0) returns x exactly.
/// Propagates ZeroMatrixError if X + xi = 0.
RankOneFactors retract(const RankOneFactors& x, const TangentVector& xi,
                       TripletDiagnostics* diag = nullptr);

}  // namespace haplo::manifold
