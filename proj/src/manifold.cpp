#include "haplo/manifold.hpp"

#include <cmath>
#include <optional>
#include <random>

namespace haplo::manifold {

namespace {

// Deterministic fallback start for the rare case where the all-ones vector
// fails to isolate the dominant triplet.
VectorXd seeded_unit_vector(Eigen::Index size) {
  std::mt19937_64 rng(0x5EEDCAFEF00DULL);
  VectorXd w(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    w(i) = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
  }
  const double n = w.norm();
  if (n == 0.0) {
    return VectorXd::Ones(size) / std::sqrt(static_cast<double>(size));
  }
  return w / n;
}

struct CoreResult {
  VectorXd u;   // left vector of `a` (length a.rows())
  double sigma = 0.0;
  VectorXd v;   // right vector of `a` (length a.cols())
  int iterations = 0;
};

// Power iteration on a a^T through the left vector w.  Returns nothing when
// the residual tolerance is not met within max_iters sweeps or the iterate
// collapses to zero.
std::optional<CoreResult> power_iterate(const MatrixXd& a, VectorXd w,
                                        double tol, int max_iters) {
  VectorXd y(a.cols());
  VectorXd z(a.rows());
  for (int it = 1; it <= max_iters; ++it) {
    y.noalias() = a.transpose() * w;
    const double s = y.norm();
    if (s == 0.0) {
      return std::nullopt;  // w fell into the null space of a^T
    }
    VectorXd v = y / s;
    z.noalias() = a * v;
    if ((z - s * w).norm() <= tol * s) {
      return CoreResult{std::move(w), s, std::move(v), it};
    }
    const double nz = z.norm();
    if (nz == 0.0) {
      return std::nullopt;
    }
    w = z / nz;
  }
  return std::nullopt;
}

// Estimates the second singular value by a short power iteration on the
// deflated operator a a^T - sigma^2 u u^T.  On exit *dominant_direction
// holds the probe iterate, which is rich in the dominant left vector
// whenever the supplied triplet is not dominant.
double estimate_sigma2(const MatrixXd& a, const VectorXd& u, double sigma,
                       VectorXd* dominant_direction) {
  const Eigen::Index m = a.rows();
  if (m < 2) {
    return 0.0;
  }
  VectorXd q = seeded_unit_vector(m);
  q -= q.dot(u) * u;
  const double nq = q.norm();
  if (nq < 1e-8) {
    q = seeded_unit_vector(m).reverse();
    q -= q.dot(u) * u;
    if (q.norm() < 1e-8) {
      return 0.0;
    }
  }
  q.normalize();
  const double s2 = sigma * sigma;
  double lambda = 0.0;
  double prev = -1.0;
  for (int k = 0; k < 12; ++k) {
    VectorXd dq = a * (a.transpose() * q);
    dq -= s2 * u.dot(q) * u;
    lambda = dq.norm();
    if (lambda <= 0.0) {
      return 0.0;
    }
    q = dq / lambda;
    if (prev >= 0.0 && std::abs(lambda - prev) <= 1e-3 * lambda) {
      break;
    }
    prev = lambda;
  }
  if (dominant_direction != nullptr) {
    *dominant_direction = q;
  }
  return std::sqrt(lambda);
}

}  // namespace

RankOneFactors top_singular_triplet(const MatrixXd& a, double tol,
                                    int max_iters, TripletDiagnostics* diag,
                                    const VectorXd* start_hint) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw InvalidArgumentError("matrix must be nonempty");
  }
  if (!(tol > 0.0) || max_iters < 1) {
    throw InvalidArgumentError("tol must be positive and max_iters >= 1");
  }
  if (a.isZero(0.0)) {
    throw ZeroMatrixError("matrix is identically zero");
  }

  // Iterate on the smaller Gram side: the left side of `work` always has
  // min(m, n) rows.
  const bool transposed = a.rows() > a.cols();
  MatrixXd work;
  if (transposed) {
    work = a.transpose();
  } else {
    work = a;
  }
  const Eigen::Index r = work.rows();

  VectorXd start;
  if (start_hint != nullptr && start_hint->size() > 0) {
    if (start_hint->size() != r) {
      throw DimensionMismatchError("start hint must match the smaller side");
    }
    const double n = start_hint->norm();
    start = n > 0.0 ? VectorXd(*start_hint / n)
                    : VectorXd(VectorXd::Ones(r) / std::sqrt(double(r)));
  } else {
    start = VectorXd::Ones(r) / std::sqrt(static_cast<double>(r));
  }

  int total_iters = 0;
  bool restarted = false;
  std::optional<CoreResult> res = power_iterate(work, start, tol, max_iters);
  if (res) {
    total_iters += res->iterations;
  } else {
    restarted = true;
    res = power_iterate(work, seeded_unit_vector(r), tol, max_iters);
    if (!res) {
      throw NoConvergenceError("power iteration did not meet tolerance");
    }
    total_iters += max_iters + res->iterations;
  }

  VectorXd better_start;
  double sigma2 = estimate_sigma2(work, res->u, res->sigma, &better_start);
  if (sigma2 > res->sigma * (1.0 + 1e-8)) {
    // Converged onto a non-dominant triplet (start was orthogonal to the
    // dominant subspace); restart from the probe direction.
    if (restarted) {
      throw NoConvergenceError("failed to isolate the dominant triplet");
    }
    restarted = true;
    res = power_iterate(work, better_start, tol, max_iters);
    if (!res) {
      throw NoConvergenceError("power iteration did not meet tolerance");
    }
    total_iters += res->iterations;
    sigma2 = estimate_sigma2(work, res->u, res->sigma, nullptr);
    if (sigma2 > res->sigma * (1.0 + 1e-8)) {
      throw NoConvergenceError("failed to isolate the dominant triplet");
    }
  }

  if (diag != nullptr) {
    diag->iterations = total_iters;
    diag->sigma2_ratio = res->sigma > 0.0 ? sigma2 / res->sigma : 0.0;
    diag->degenerate = sigma2 >= (1.0 - 1e-6) * res->sigma;
    diag->restarted = restarted;
  }

  if (transposed) {
    return RankOneFactors(res->v, res->sigma, res->u);
  }
  return RankOneFactors(res->u, res->sigma, res->v);
}

TangentVector project_tangent(const RankOneFactors& x, const MatrixXd& g) {
  if (g.rows() != x.rows() || g.cols() != x.cols()) {
    throw DimensionMismatchError("gradient does not match base point");
  }
  VectorXd gv = g * x.v();
  VectorXd gtu = g.transpose() * x.u();
  const double m = x.u().dot(gv);
  VectorXd up = gv - m * x.u();
  up -= up.dot(x.u()) * x.u();  // second pass kills the rounding residual
  VectorXd vp = gtu - m * x.v();
  vp -= vp.dot(x.v()) * x.v();
  TangentVector xi(m, std::move(up), std::move(vp));
  xi.validate_at(x);
  return xi;
}

TangentVector project_tangent_sparse(const RankOneFactors& x,
                                     const ReadMatrix& rm,
                                     std::span<const double> values) {
  if (rm.rows() != x.rows() || rm.cols() != x.cols()) {
    throw DimensionMismatchError("read matrix does not match base point");
  }
  if (values.size() != rm.entries().size()) {
    throw DimensionMismatchError("one value per observed entry required");
  }
  VectorXd gv = VectorXd::Zero(x.rows());
  VectorXd gtu = VectorXd::Zero(x.cols());
  const auto& entries = rm.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    gv(e.i) += values[k] * x.v()(e.j);
    gtu(e.j) += values[k] * x.u()(e.i);
  }
  const double m = x.u().dot(gv);
  VectorXd up = gv - m * x.u();
  up -= up.dot(x.u()) * x.u();
  VectorXd vp = gtu - m * x.v();
  vp -= vp.dot(x.v()) * x.v();
  return TangentVector(m, std::move(up), std::move(vp));
}

double inner(const RankOneFactors& x, const TangentVector& xi,
             const TangentVector& eta) {
  if (xi.u_p.size() != x.u().size() || eta.u_p.size() != x.u().size() ||
      xi.v_p.size() != x.v().size() || eta.v_p.size() != x.v().size()) {
    throw DimensionMismatchError("tangent vectors do not match base point");
  }
  return xi.m_scalar * eta.m_scalar + xi.u_p.dot(eta.u_p) + xi.v_p.dot(eta.v_p);
}

double norm(const RankOneFactors& x, const TangentVector& xi) {
  return std::sqrt(inner(x, xi, xi));
}

RankOneFactors retract(const RankOneFactors& x, const TangentVector& xi,
                       TripletDiagnostics* diag) {
  if (xi.u_p.size() != x.u().size() || xi.v_p.size() != x.v().size()) {
    throw DimensionMismatchError("tangent vector does not match base point");
  }
  if (xi.is_zero()) {
    if (diag != nullptr) {
      *diag = TripletDiagnostics{};
    }
    return x;  // R_X(0) = X exactly
  }
  MatrixXd y = (x.sigma() + xi.m_scalar) * x.u() * x.v().transpose();
  y.noalias() += xi.u_p * x.v().transpose();
  y.noalias() += x.u() * xi.v_p.transpose();
  const VectorXd& hint = x.rows() <= x.cols() ? x.u() : x.v();
  return top_singular_triplet(y, 1e-10, 5000, diag, &hint);
}

}  // namespace haplo::manifold
