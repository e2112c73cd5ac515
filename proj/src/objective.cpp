#include "haplo/objective.hpp"

#include <cmath>

namespace haplo::objective {

namespace {

void check_dims(const ReadMatrix& rm, const RankOneFactors& x) {
  if (rm.rows() != x.rows() || rm.cols() != x.cols()) {
    throw DimensionMismatchError("factors do not match read matrix");
  }
}

}  // namespace

std::vector<double> residuals(const ReadMatrix& rm, const RankOneFactors& x,
                              const SolverConfig& cfg) {
  cfg.validate();
  check_dims(rm, x);
  std::vector<double> e;
  e.reserve(rm.entries().size());
  for (const Entry& ent : rm.entries()) {
    const double xij = x.entry(ent.i, ent.j);
    e.push_back(static_cast<double>(ent.v) -
                cfg.gamma1 * std::atan(cfg.gamma2 * xij));
  }
  return e;
}

double cost(const ReadMatrix& rm, const RankOneFactors& x,
            const SolverConfig& cfg) {
  cfg.validate();
  check_dims(rm, x);
  double total = 0.0;
  for (const Entry& ent : rm.entries()) {
    const double xij = x.entry(ent.i, ent.j);
    const double e = static_cast<double>(ent.v) -
                     cfg.gamma1 * std::atan(cfg.gamma2 * xij);
    total += std::pow(std::abs(e), cfg.p);
  }
  return total;
}

double cost_dense(const ReadMatrix& rm, const MatrixXd& a,
                  const SolverConfig& cfg) {
  cfg.validate();
  if (a.rows() != rm.rows() || a.cols() != rm.cols()) {
    throw DimensionMismatchError("matrix does not match read matrix");
  }
  double total = 0.0;
  for (const Entry& ent : rm.entries()) {
    const double e = static_cast<double>(ent.v) -
                     cfg.gamma1 * std::atan(cfg.gamma2 * a(ent.i, ent.j));
    total += std::pow(std::abs(e), cfg.p);
  }
  return total;
}

std::vector<double> euclidean_gradient_values(const ReadMatrix& rm,
                                              const RankOneFactors& x,
                                              const SolverConfig& cfg) {
  cfg.validate();
  check_dims(rm, x);
  std::vector<double> g;
  g.reserve(rm.entries().size());
  for (const Entry& ent : rm.entries()) {
    const double xij = x.entry(ent.i, ent.j);
    const double z = cfg.gamma2 * xij;
    const double e = static_cast<double>(ent.v) - cfg.gamma1 * std::atan(z);
    // |e| is bounded away from 0 by 1 - gamma1*pi/2, so |e|^(p-1) is safe to
    // evaluate for every p >= 1.
    const double mag = std::pow(std::abs(e), cfg.p - 1.0);
    const double sign_e = e >= 0.0 ? 1.0 : -1.0;
    g.push_back(-cfg.p * mag * sign_e * cfg.gamma1 * cfg.gamma2 /
                (1.0 + z * z));
  }
  return g;
}

MatrixXd euclidean_gradient(const ReadMatrix& rm, const RankOneFactors& x,
                            const SolverConfig& cfg) {
  const std::vector<double> values = euclidean_gradient_values(rm, x, cfg);
  MatrixXd g = MatrixXd::Zero(rm.rows(), rm.cols());
  const auto& entries = rm.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    g(entries[k].i, entries[k].j) = values[k];
  }
  return g;
}

TangentVector riemannian_gradient(const ReadMatrix& rm,
                                  const RankOneFactors& x,
                                  const SolverConfig& cfg) {
  const std::vector<double> values = euclidean_gradient_values(rm, x, cfg);
  return manifold::project_tangent_sparse(x, rm, values);
}

}  // namespace haplo::objective
