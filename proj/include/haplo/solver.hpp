#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "haplo/manifold.hpp"
#include "haplo/objective.hpp"
#include "haplo/types.hpp"

namespace haplo::solver {

enum class Termination { GradientTolerance, MaxIters, LineSearchFailure };

std::string to_string(Termination t);

/// Outcome of a manifold descent run.
struct SolveResult {
  RankOneFactors x_final;
  Haplotype haplotype;
  int iterations = 0;                 // accepted steps
  std::vector<double> cost_trace;     // f(X_0), f(X_1), ...; non-increasing
  bool converged = false;             // true iff termination == GradientTolerance
  Termination termination = Termination::MaxIters;
  double final_grad_norm = 0.0;       // ||xi|| at the last evaluated point
  int zero_sign_count = 0;            // |v_j| < 1e-12 positions mapped to +1
  int degenerate_retractions = 0;     // retractions with sigma1 ~ sigma2
};

/// Cost and Riemannian gradient of a smooth function on the rank-one
/// manifold; the descent engine is written against this interface so the
/// smoothed error-correction objective and the Frobenius baseline share the
/// same line-search and retraction path.
struct ManifoldObjective {
  std::function<double(const RankOneFactors&)> cost;
  std::function<TangentVector(const RankOneFactors&)> riemannian_grad;
};

/// Rank-one approximation of P_Omega(R), the descent starting point.
/// Throws ZeroMatrixError when rm has no entries.
RankOneFactors initial_point(const ReadMatrix& rm);

struct InitializationCheck {
  double f0 = 0.0;
  std::int64_t omega_count = 0;
  bool admissible = false;  // f0 < |Omega|
};

/// Evaluates the descent precondition f(X0) < |Omega| for the smoothed cost.
InitializationCheck check_initialization(const ReadMatrix& rm,
                                         const RankOneFactors& x0,
                                         const SolverConfig& cfg);

struct ArmijoResult {
  int m_star = 0;
  RankOneFactors x_next;
  double f_next = 0.0;
  int degenerate_retractions = 0;
};

/// Backtracking line search along xi (the negative gradient direction at x):
/// finds the smallest integer m >= 0 with
///   f(x) - f(retract(x, alpha_bar beta^m xi)) >= sigma alpha_bar beta^m <xi,xi>
/// and returns the retracted point.  Throws LineSearchFailureError when no
/// m <= max_backtracks satisfies the inequality.
ArmijoResult armijo_step(const ManifoldObjective& obj, const RankOneFactors& x,
                         const TangentVector& xi, const SolverConfig& cfg,
                         std::optional<double> f_x = std::nullopt);

/// Convenience overload for the smoothed error-correction objective.
ArmijoResult armijo_step(const ReadMatrix& rm, const RankOneFactors& x,
                         const TangentVector& xi, const SolverConfig& cfg);

/// Gradient descent with Armijo backtracking from an explicit start point.
/// Shared by the smoothed objective and the Frobenius baseline.
SolveResult descend(const ManifoldObjective& obj, RankOneFactors x0,
                    const SolverConfig& cfg);

/// Full solve of the smoothed error-correction problem: initializes from
/// initial_point(rm), refuses to run when f(X0) >= |Omega| (throws
/// InadmissibleStartError), then iterates until the gradient norm drops
/// below cfg.tau or a cap is hit.
SolveResult solve(const ReadMatrix& rm, const SolverConfig& cfg);

/// Entrywise sign of v; entries with |v_j| < 1e-12 are set to +1 and counted
/// in *zero_count when provided.
Haplotype extract_haplotype(const RankOneFactors& x, int* zero_count = nullptr);

}  // namespace haplo::solver
