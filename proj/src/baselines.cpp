#include "haplo/baselines.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace haplo::baselines {

AltMinResult altmin_factorize(const ReadMatrix& rm, int max_iters,
                              double rel_tol) {
  if (max_iters < 1 || !(rel_tol > 0.0)) {
    throw InvalidArgumentError("max_iters must be >= 1 and rel_tol positive");
  }
  const int m = rm.rows();
  const int n = rm.cols();
  std::vector<int> row_count(m, 0);
  std::vector<int> col_count(n, 0);
  for (const Entry& e : rm.entries()) {
    ++row_count[e.i];
    ++col_count[e.j];
  }
  for (int i = 0; i < m; ++i) {
    if (row_count[i] == 0) {
      std::ostringstream msg;
      msg << "row " << i << " has no observations";
      throw EmptyRowOrColumnError(msg.str());
    }
  }
  for (int j = 0; j < n; ++j) {
    if (col_count[j] == 0) {
      std::ostringstream msg;
      msg << "column " << j << " has no observations";
      throw EmptyRowOrColumnError(msg.str());
    }
  }

  const RankOneFactors x0 = solver::initial_point(rm);
  VectorXd u = x0.sigma() * x0.u();
  VectorXd v = x0.v();

  constexpr double kDenTol = 1e-14;
  const auto& entries = rm.entries();

  auto objective = [&]() {
    double total = 0.0;
    for (const Entry& e : entries) {
      const double d = static_cast<double>(e.v) - u(e.i) * v(e.j);
      total += d * d;
    }
    return total;
  };

  double prev = objective();
  double obj = prev;
  std::vector<double> trace{prev};
  int iterations = 0;
  for (int it = 1; it <= max_iters; ++it) {
    // u_i <- (sum_j r_ij v_j) / (sum_j v_j^2), then the symmetric v update.
    VectorXd num = VectorXd::Zero(m);
    VectorXd den = VectorXd::Zero(m);
    for (const Entry& e : entries) {
      num(e.i) += static_cast<double>(e.v) * v(e.j);
      den(e.i) += v(e.j) * v(e.j);
    }
    for (int i = 0; i < m; ++i) {
      if (den(i) < kDenTol) {
        std::ostringstream msg;
        msg << "degenerate u-update denominator at row " << i;
        throw DegenerateUpdateError(msg.str());
      }
      u(i) = num(i) / den(i);
    }
    num = VectorXd::Zero(n);
    den = VectorXd::Zero(n);
    for (const Entry& e : entries) {
      num(e.j) += static_cast<double>(e.v) * u(e.i);
      den(e.j) += u(e.i) * u(e.i);
    }
    for (int j = 0; j < n; ++j) {
      if (den(j) < kDenTol) {
        std::ostringstream msg;
        msg << "degenerate v-update denominator at column " << j;
        throw DegenerateUpdateError(msg.str());
      }
      v(j) = num(j) / den(j);
    }
    obj = objective();
    trace.push_back(obj);
    iterations = it;
    if (prev - obj < rel_tol * std::max(prev, 1e-300)) {
      break;
    }
    prev = obj;
  }

  return AltMinResult{std::move(u), std::move(v), iterations, obj,
                      std::move(trace)};
}

double frobenius_cost(const ReadMatrix& rm, const RankOneFactors& x) {
  if (rm.rows() != x.rows() || rm.cols() != x.cols()) {
    throw DimensionMismatchError("factors do not match read matrix");
  }
  double total = 0.0;
  for (const Entry& e : rm.entries()) {
    const double d = static_cast<double>(e.v) - x.entry(e.i, e.j);
    total += d * d;
  }
  return total;
}

namespace {

std::vector<double> frobenius_gradient_values(const ReadMatrix& rm,
                                              const RankOneFactors& x) {
  std::vector<double> g;
  g.reserve(rm.entries().size());
  for (const Entry& e : rm.entries()) {
    g.push_back(-2.0 * (static_cast<double>(e.v) - x.entry(e.i, e.j)));
  }
  return g;
}

}  // namespace

MatrixXd frobenius_euclidean_gradient(const ReadMatrix& rm,
                                      const RankOneFactors& x) {
  if (rm.rows() != x.rows() || rm.cols() != x.cols()) {
    throw DimensionMismatchError("factors do not match read matrix");
  }
  MatrixXd g = MatrixXd::Zero(rm.rows(), rm.cols());
  for (const Entry& e : rm.entries()) {
    g(e.i, e.j) = -2.0 * (static_cast<double>(e.v) - x.entry(e.i, e.j));
  }
  return g;
}

solver::SolveResult frobenius_manifold_solve(const ReadMatrix& rm,
                                             const SolverConfig& cfg) {
  cfg.validate();
  solver::ManifoldObjective obj{
      [&rm](const RankOneFactors& p) { return frobenius_cost(rm, p); },
      [&rm](const RankOneFactors& p) {
        return manifold::project_tangent_sparse(p, rm,
                                                frobenius_gradient_values(rm, p));
      }};
  return solver::descend(obj, solver::initial_point(rm), cfg);
}

}  // namespace haplo::baselines
