#include "haplo/types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace haplo {

ReadMatrix::ReadMatrix(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    throw InvalidArgumentError("ReadMatrix dimensions must be >= 1");
  }
  for (const Entry& e : entries_) {
    if (e.i < 0 || e.i >= rows_ || e.j < 0 || e.j >= cols_) {
      std::ostringstream msg;
      msg << "entry (" << e.i << "," << e.j << ") out of range for " << rows_
          << "x" << cols_ << " matrix";
      throw IndexOutOfRangeError(msg.str());
    }
    if (e.v != 1 && e.v != -1) {
      throw InvalidArgumentError("entry values must be -1 or +1");
    }
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k].i == entries_[k - 1].i && entries_[k].j == entries_[k - 1].j) {
      std::ostringstream msg;
      msg << "duplicate entry (" << entries_[k].i << "," << entries_[k].j << ")";
      throw InvalidArgumentError(msg.str());
    }
  }
  row_start_.assign(static_cast<std::size_t>(rows_) + 1, 0);
  for (const Entry& e : entries_) {
    ++row_start_[static_cast<std::size_t>(e.i) + 1];
  }
  for (std::size_t i = 1; i < row_start_.size(); ++i) {
    row_start_[i] += row_start_[i - 1];
  }
}

std::pair<std::size_t, std::size_t> ReadMatrix::row_range(int i) const {
  if (i < 0 || i >= rows_) {
    throw IndexOutOfRangeError("row index out of range");
  }
  return {row_start_[static_cast<std::size_t>(i)],
          row_start_[static_cast<std::size_t>(i) + 1]};
}

namespace {

void require_pm1(const VectorXi& v, const char* what) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) != 1 && v(k) != -1) {
      throw InvalidArgumentError(std::string(what) + " entries must be -1 or +1");
    }
  }
}

}  // namespace

GroundTruth::GroundTruth(VectorXi h_in, VectorXi c_in)
    : h(std::move(h_in)), c(std::move(c_in)) {
  if (h.size() < 1 || c.size() < 1) {
    throw InvalidArgumentError("GroundTruth vectors must be nonempty");
  }
  require_pm1(h, "haplotype");
  require_pm1(c, "orientation");
}

Haplotype::Haplotype(VectorXi v) : values(std::move(v)) {
  if (values.size() < 1) {
    throw InvalidArgumentError("Haplotype must be nonempty");
  }
  require_pm1(values, "haplotype");
}

RankOneFactors::RankOneFactors(VectorXd u, double sigma, VectorXd v)
    : u_(std::move(u)), sigma_(sigma), v_(std::move(v)) {
  if (u_.size() < 1 || v_.size() < 1) {
    throw InvalidArgumentError("factor vectors must be nonempty");
  }
  if (!(sigma_ >= 0.0)) {
    throw InvalidArgumentError("sigma must be nonnegative");
  }
  constexpr double kNormTol = 1e-12;
  if (std::abs(u_.norm() - 1.0) > kNormTol || std::abs(v_.norm() - 1.0) > kNormTol) {
    throw InvalidArgumentError("factor vectors must have unit norm");
  }
  // Sign convention: the entry of u with largest absolute value is positive,
  // ties broken by lowest index.
  Eigen::Index k = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < u_.size(); ++i) {
    const double a = std::abs(u_(i));
    if (a > best) {
      best = a;
      k = i;
    }
  }
  if (u_(k) < 0.0) {
    u_ = -u_;
    v_ = -v_;
  }
}

RankOneFactors RankOneFactors::from_outer(const VectorXd& a, const VectorXd& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw ZeroMatrixError("outer-product factor is zero");
  }
  return RankOneFactors(a / na, na * nb, b / nb);
}

MatrixXd TangentVector::embed(const RankOneFactors& x) const {
  return m_scalar * x.u() * x.v().transpose() + u_p * x.v().transpose() +
         x.u() * v_p.transpose();
}

void TangentVector::validate_at(const RankOneFactors& x) const {
  if (u_p.size() != x.u().size() || v_p.size() != x.v().size()) {
    throw DimensionMismatchError("tangent vector does not match base point");
  }
  constexpr double kOrthoTol = 1e-10;
  if (std::abs(u_p.dot(x.u())) > kOrthoTol * u_p.norm()) {
    throw InvalidArgumentError("u_p is not orthogonal to u");
  }
  if (std::abs(v_p.dot(x.v())) > kOrthoTol * v_p.norm()) {
    throw InvalidArgumentError("v_p is not orthogonal to v");
  }
}

SolverConfig::SolverConfig(double gamma1_in, double gamma2_in, double p_in,
                           double alpha_bar_in, double beta_in,
                           double sigma_armijo_in, double tau_in,
                           int max_iters_in, int max_backtracks_in)
    : gamma1(gamma1_in),
      gamma2(gamma2_in),
      p(p_in),
      alpha_bar(alpha_bar_in),
      beta(beta_in),
      sigma_armijo(sigma_armijo_in),
      tau(tau_in),
      max_iters(max_iters_in),
      max_backtracks(max_backtracks_in) {
  validate();
}

void SolverConfig::validate() const {
  constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
  if (!(gamma1 > 0.0 && gamma1 < kTwoOverPi)) {
    throw InvalidArgumentError("gamma1 must lie in (0, 2/pi)");
  }
  if (!(gamma2 > 0.0)) {
    throw InvalidArgumentError("gamma2 must be positive");
  }
  if (!(p >= 1.0 && p <= 2.0)) {
    throw InvalidArgumentError("p must lie in [1, 2]");
  }
  if (!(alpha_bar > 0.0)) {
    throw InvalidArgumentError("alpha_bar must be positive");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgumentError("beta must lie in (0, 1)");
  }
  if (!(sigma_armijo > 0.0 && sigma_armijo < 1.0)) {
    throw InvalidArgumentError("sigma_armijo must lie in (0, 1)");
  }
  if (!(tau > 0.0)) {
    throw InvalidArgumentError("tau must be positive");
  }
  if (max_iters < 1) {
    throw InvalidArgumentError("max_iters must be >= 1");
  }
  if (max_backtracks < 1) {
    throw InvalidArgumentError("max_backtracks must be >= 1");
  }
}

MatrixXd dense(const ReadMatrix& rm) {
  MatrixXd a = MatrixXd::Zero(rm.rows(), rm.cols());
  for (const Entry& e : rm.entries()) {
    a(e.i, e.j) = static_cast<double>(e.v);
  }
  return a;
}

MatrixXi full_matrix(const GroundTruth& gt) {
  return gt.c * gt.h.transpose();
}

}  // namespace haplo
