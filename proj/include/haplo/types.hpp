#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "haplo/errors.hpp"

namespace haplo {

using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// One observed entry of a read matrix: 0-based indices, value in {-1,+1}.
struct Entry {
  int i = 0;
  int j = 0;
  int v = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse m x n matrix of observed +/-1 read values.  The (i,j) pairs of
/// `entries` form the observation set Omega.  Entries are stored sorted in
/// row-major order and are immutable after construction.
class ReadMatrix {
public:
  ReadMatrix(int rows, int cols, std::vector<Entry> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::int64_t omega_size() const { return static_cast<std::int64_t>(entries_.size()); }

  /// Entries of row i as a [begin, end) range into entries().
  std::pair<std::size_t, std::size_t> row_range(int i) const;

private:
  int rows_;
  int cols_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_start_;  // CSR-style offsets, size rows_+1
};

/// True haplotype h (length n) and read orientations c (length m), all +/-1.
/// The induced full matrix c*h^T is rank one with +/-1 entries.
struct GroundTruth {
  VectorXi h;
  VectorXi c;

  GroundTruth(VectorXi h, VectorXi c);
};

/// A haplotype estimate: a vector of +/-1 entries.
struct Haplotype {
  VectorXi values;

  explicit Haplotype(VectorXi v);
  int size() const { return static_cast<int>(values.size()); }
};

/// Point X = sigma * u * v^T on the rank-one manifold, stored in factored
/// form with unit u, v and sigma >= 0.  The sign convention (the entry of u
/// with largest absolute value is positive, ties broken by lowest index) is
/// applied at construction so factorizations are unique.
class RankOneFactors {
public:
  RankOneFactors(VectorXd u, double sigma, VectorXd v);

  /// Build from an arbitrary nonzero outer product a * b^T.
  static RankOneFactors from_outer(const VectorXd& a, const VectorXd& b);

  const VectorXd& u() const { return u_; }
  double sigma() const { return sigma_; }
  const VectorXd& v() const { return v_; }
  int rows() const { return static_cast<int>(u_.size()); }
  int cols() const { return static_cast<int>(v_.size()); }

  /// Dense sigma * u * v^T.
  MatrixXd dense() const { return sigma_ * u_ * v_.transpose(); }

  /// Value of a single entry sigma * u_i * v_j.
  double entry(int i, int j) const { return sigma_ * u_(i) * v_(j); }

private:
  VectorXd u_;
  double sigma_;
  VectorXd v_;
};

/// Tangent vector at a rank-one point in the (M, U_p, V_p) parameterization:
/// xi = M * u * v^T + u_p * v^T + u * v_p^T with u_p othogonal to u and v_p
/// orthogonal to v.
struct TangentVector {
  double m_scalar = 0.0;
  VectorXd u_p;
  VectorXd v_p;

  TangentVector() = default;
  TangentVector(double m, VectorXd up, VectorXd vp)
      : m_scalar(m), u_p(std::move(up)), v_p(std::move(vp)) {}

  static TangentVector zero(int rows, int cols) {
    return TangentVector(0.0, VectorXd::Zero(rows), VectorXd::Zero(cols));
  }

  bool is_zero() const {
    return m_scalar == 0.0 && u_p.isZero(0.0) && v_p.isZero(0.0);
  }

  /// Dense embedding of the tangent vector at base point x.
  MatrixXd embed(const RankOneFactors& x) const;

  /// Throws unless u_p, v_p are orthogonal to the base point's u, v within
  /// the documented 1e-10 relative tolerance.
  void validate_at(const RankOneFactors& x) const;
};

/// Parameters of the smoothed objective and the descent loop.  Ranges are
/// enforced at construction; defaults follow the benchmark configuration.
struct SolverConfig {
  double gamma1 = 0.5;       // in (0, 2/pi)
  double gamma2 = 2.0;       // > 0
  double p = 1.2;            // in [1, 2]
  double alpha_bar = 1.0;    // > 0
  double beta = 0.5;         // in (0, 1)
  double sigma_armijo = 1e-4;  // in (0, 1)
  double tau = 1e-6;         // > 0
  int max_iters = 2000;
  int max_backtracks = 60;

  SolverConfig() = default;
  SolverConfig(double gamma1, double gamma2, double p, double alpha_bar,
               double beta, double sigma_armijo, double tau, int max_iters,
               int max_backtracks);

  /// Validates all ranges; called by every operation that consumes a config.
  void validate() const;
};

/// P_Omega(R): observed entries keep their sign, unobserved entries are 0.
MatrixXd dense(const ReadMatrix& rm);

/// The full rank-one matrix c * h^T.
MatrixXi full_matrix(const GroundTruth& gt);

}  // namespace haplo
