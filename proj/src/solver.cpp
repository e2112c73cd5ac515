#include "haplo/solver.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace haplo::solver {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::GradientTolerance:
      return "GradientTolerance";
    case Termination::MaxIters:
      return "MaxIters";
    case Termination::LineSearchFailure:
      return "LineSearchFailure";
  }
  return "Unknown";
}

RankOneFactors initial_point(const ReadMatrix& rm) {
  return manifold::top_singular_triplet(dense(rm));
}

InitializationCheck check_initialization(const ReadMatrix& rm,
                                         const RankOneFactors& x0,
                                         const SolverConfig& cfg) {
  InitializationCheck out;
  out.f0 = objective::cost(rm, x0, cfg);
  out.omega_count = rm.omega_size();
  out.admissible = out.f0 < static_cast<double>(out.omega_count);
  return out;
}

namespace {

TangentVector scaled(const TangentVector& xi, double t) {
  return TangentVector(t * xi.m_scalar, t * xi.u_p, t * xi.v_p);
}

}  // namespace

ArmijoResult armijo_step(const ManifoldObjective& obj, const RankOneFactors& x,
                         const TangentVector& xi, const SolverConfig& cfg,
                         std::optional<double> f_x) {
  cfg.validate();
  const double f0 = f_x.has_value() ? *f_x : obj.cost(x);
  const double gg = manifold::inner(x, xi, xi);
  for (int m = 0; m <= cfg.max_backtracks; ++m) {
    const double t = cfg.alpha_bar * std::pow(cfg.beta, m);
    manifold::TripletDiagnostics diag;
    RankOneFactors x_next = manifold::retract(x, scaled(xi, t), &diag);
    const double f_next = obj.cost(x_next);
    if (f0 - f_next >= cfg.sigma_armijo * t * gg) {
      return ArmijoResult{m, std::move(x_next), f_next, diag.degenerate ? 1 : 0};
    }
  }
  std::ostringstream msg;
  msg << "no sufficient decrease within " << cfg.max_backtracks
      << " backtracks (f = " << f0 << ", <xi,xi> = " << gg << ")";
  throw LineSearchFailureError(msg.str());
}

ArmijoResult armijo_step(const ReadMatrix& rm, const RankOneFactors& x,
                         const TangentVector& xi, const SolverConfig& cfg) {
  ManifoldObjective obj{
      [&rm, &cfg](const RankOneFactors& p) { return objective::cost(rm, p, cfg); },
      [&rm, &cfg](const RankOneFactors& p) {
        return objective::riemannian_gradient(rm, p, cfg);
      }};
  return armijo_step(obj, x, xi, cfg);
}

SolveResult descend(const ManifoldObjective& obj, RankOneFactors x,
                    const SolverConfig& cfg) {
  cfg.validate();
  double f = obj.cost(x);
  std::vector<double> trace{f};
  Termination term = Termination::MaxIters;
  double grad_norm = 0.0;
  int iterations = 0;
  int degenerate = 0;

  for (int it = 0; it < cfg.max_iters; ++it) {
    TangentVector xi = obj.riemannian_grad(x);
    xi.m_scalar = -xi.m_scalar;
    xi.u_p = -xi.u_p;
    xi.v_p = -xi.v_p;
    grad_norm = manifold::norm(x, xi);
    if (grad_norm < cfg.tau) {
      term = Termination::GradientTolerance;
      break;
    }
    std::optional<ArmijoResult> step;
    try {
      step.emplace(armijo_step(obj, x, xi, cfg, f));
    } catch (const LineSearchFailureError&) {
      term = Termination::LineSearchFailure;
      break;
    }
    if (step->f_next > f) {
      throw Error("descent invariant violated: cost increased");
    }
    x = std::move(step->x_next);
    f = step->f_next;
    degenerate += step->degenerate_retractions;
    trace.push_back(f);
    iterations = it + 1;
  }

  int zero_count = 0;
  Haplotype h = extract_haplotype(x, &zero_count);
  SolveResult out{std::move(x), std::move(h)};
  out.iterations = iterations;
  out.cost_trace = std::move(trace);
  out.termination = term;
  out.converged = term == Termination::GradientTolerance;
  out.final_grad_norm = grad_norm;
  out.zero_sign_count = zero_count;
  out.degenerate_retractions = degenerate;
  return out;
}

SolveResult solve(const ReadMatrix& rm, const SolverConfig& cfg) {
  cfg.validate();
  RankOneFactors x0 = initial_point(rm);
  const InitializationCheck check = check_initialization(rm, x0, cfg);
  if (!check.admissible) {
    std::ostringstream msg;
    msg << "initial point violates f(X0) < |Omega|: f(X0) = " << check.f0
        << ", |Omega| = " << check.omega_count;
    throw InadmissibleStartError(msg.str(), check.f0, check.omega_count);
  }
  ManifoldObjective obj{
      [&rm, &cfg](const RankOneFactors& p) { return objective::cost(rm, p, cfg); },
      [&rm, &cfg](const RankOneFactors& p) {
        return objective::riemannian_gradient(rm, p, cfg);
      }};
  return descend(obj, std::move(x0), cfg);
}

Haplotype extract_haplotype(const RankOneFactors& x, int* zero_count) {
  constexpr double kZeroTol = 1e-12;
  VectorXi values(x.cols());
  int zeros = 0;
  for (Eigen::Index j = 0; j < x.v().size(); ++j) {
    const double vj = x.v()(j);
    if (std::abs(vj) < kZeroTol) {
      values(j) = 1;
      ++zeros;
    } else {
      values(j) = vj > 0.0 ? 1 : -1;
    }
  }
  if (zero_count != nullptr) {
    *zero_count = zeros;
  }
  return Haplotype(std::move(values));
}

}  // namespace haplo::solver
