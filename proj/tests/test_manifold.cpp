#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "example1.hpp"
#include "haplo/manifold.hpp"
#include "test_util.hpp"

using namespace haplo;
using manifold::inner;
using manifold::project_tangent;
using manifold::retract;
using manifold::top_singular_triplet;

namespace {

// Independent oracle: dense SVD with the same sign normalization.
RankOneFactors svd_oracle(const MatrixXd& a) {
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return RankOneFactors(svd.matrixU().col(0), svd.singularValues()(0),
                        svd.matrixV().col(0));
}

}  // namespace

TEST_CASE("top triplet of a diagonal matrix") {
  MatrixXd a(2, 2);
  a << 2, 0, 0, 1;
  const RankOneFactors x = top_singular_triplet(a);
  CHECK(x.sigma() == doctest::Approx(2.0));
  CHECK(x.u()(0) == doctest::Approx(1.0));
  CHECK(std::abs(x.u()(1)) < 1e-9);
  CHECK(x.v()(0) == doctest::Approx(1.0));
}

TEST_CASE("top triplet of the demo rank-one matrix") {
  const MatrixXd a = demo::rbar().cast<double>();
  const RankOneFactors x = top_singular_triplet(a);
  CHECK(x.sigma() == doctest::Approx(std::sqrt(15.0)));
  const VectorXd h = demo::h1().cast<double>() / std::sqrt(5.0);
  const double align = std::abs(x.v().dot(h));
  CHECK(align == doctest::Approx(1.0));
  const RankOneFactors oracle = svd_oracle(a);
  CHECK((x.dense() - oracle.dense()).norm() < 1e-8);
}

TEST_CASE("top triplet matches the dense SVD oracle on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const int n = 2 + static_cast<int>(rng() % 7);
    const MatrixXd a = testutil::gaussian_matrix(rng, m, n);
    manifold::TripletDiagnostics diag;
    const RankOneFactors x = top_singular_triplet(a, 1e-12, 20000, &diag);
    const RankOneFactors oracle = svd_oracle(a);
    CHECK(std::abs(x.sigma() - oracle.sigma()) < 1e-8 * oracle.sigma());
    CHECK((x.dense() - oracle.dense()).norm() < 1e-8 * oracle.sigma());
    // both residual identities hold at the requested tolerance
    CHECK((a * x.v() - x.sigma() * x.u()).norm() <= 1e-10 * x.sigma());
    CHECK((a.transpose() * x.u() - x.sigma() * x.v()).norm() <= 1e-10 * x.sigma());
    CHECK_FALSE(diag.degenerate);
  }
}

TEST_CASE("top triplet rejects a zero matrix and unreachable tolerances") {
  CHECK_THROWS_AS(top_singular_triplet(MatrixXd::Zero(3, 4)), ZeroMatrixError);
  MatrixXd a(2, 2);
  a << 1, 0, 0, 0.99;
  CHECK_THROWS_AS(top_singular_triplet(a, 1e-10, 1), NoConvergenceError);
}

TEST_CASE("near-tie singular values are flagged degenerate") {
  MatrixXd a = MatrixXd::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  a(2, 2) = 0.2;
  manifold::TripletDiagnostics diag;
  const RankOneFactors x = top_singular_triplet(a, 1e-10, 5000, &diag);
  CHECK(x.sigma() == doctest::Approx(1.0));
  CHECK(diag.degenerate);
  CHECK(diag.sigma2_ratio == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("dominant triplet is found even when the start is orthogonal to it") {
  // ones is exactly orthogonal to the dominant left direction (1, -1)/sqrt(2)
  MatrixXd a(2, 3);
  a << 2, 0, 2,
      -2, 0, -2;
  a(0, 1) = 1.0;
  a(1, 1) = 1.0;
  manifold::TripletDiagnostics diag;
  const RankOneFactors x = top_singular_triplet(a, 1e-10, 5000, &diag);
  const RankOneFactors oracle = svd_oracle(a);
  CHECK(x.sigma() == doctest::Approx(oracle.sigma()));
  CHECK((x.dense() - oracle.dense()).norm() < 1e-8);
}

TEST_CASE("projection reproduces matrices already in the tangent space") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    const RankOneFactors x = testutil::random_point(rng, 6, 5);
    const TangentVector xi = testutil::random_tangent(rng, x);
    const TangentVector back = project_tangent(x, xi.embed(x));
    CHECK(back.m_scalar == doctest::Approx(xi.m_scalar).epsilon(1e-10));
    CHECK((back.u_p - xi.u_p).norm() < 1e-10 * (1.0 + xi.u_p.norm()));
    CHECK((back.v_p - xi.v_p).norm() < 1e-10 * (1.0 + xi.v_p.norm()));
  }
}

TEST_CASE("projection annihilates normal-space directions") {
  std::mt19937_64 rng(9);
  const RankOneFactors x = testutil::random_point(rng, 5, 4);
  VectorXd uperp = testutil::gaussian_vector(rng, 5);
  uperp -= uperp.dot(x.u()) * x.u();
  uperp -= uperp.dot(x.u()) * x.u();
  VectorXd vperp = testutil::gaussian_vector(rng, 4);
  vperp -= vperp.dot(x.v()) * x.v();
  vperp -= vperp.dot(x.v()) * x.v();
  const TangentVector xi = project_tangent(x, uperp * vperp.transpose());
  CHECK(std::abs(xi.m_scalar) < 1e-12);
  CHECK(xi.u_p.norm() < 1e-12);
  CHECK(xi.v_p.norm() < 1e-12);
}

TEST_CASE("projection residual is orthogonal to the tangent space") {
  std::mt19937_64 rng(13);
  const RankOneFactors x = testutil::random_point(rng, 6, 5);
  const MatrixXd g = testutil::gaussian_matrix(rng, 6, 5);
  const TangentVector xi = project_tangent(x, g);
  const MatrixXd residual = g - xi.embed(x);
  for (int k = 0; k < 10; ++k) {
    const TangentVector eta = testutil::random_tangent(rng, x);
    const double ip = (residual.transpose() * eta.embed(x)).trace();
    CHECK(std::abs(ip) < 1e-10 * (1.0 + residual.norm() * eta.embed(x).norm()));
  }
}

TEST_CASE("projection is idempotent") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 6; ++trial) {
    const RankOneFactors x = testutil::random_point(rng, 7, 4);
    const MatrixXd g = testutil::gaussian_matrix(rng, 7, 4);
    const TangentVector once = project_tangent(x, g);
    const TangentVector twice = project_tangent(x, once.embed(x));
    CHECK(std::abs(once.m_scalar - twice.m_scalar) < 1e-10);
    CHECK((once.u_p - twice.u_p).norm() < 1e-10);
    CHECK((once.v_p - twice.v_p).norm() < 1e-10);
  }
}

TEST_CASE("sparse projection agrees with the dense path") {
  std::mt19937_64 rng(21);
  const RankOneFactors x = testutil::random_point(rng, 5, 6);
  std::vector<Entry> entries{{0, 0, 1}, {1, 3, -1}, {2, 2, 1}, {4, 5, -1}, {3, 1, 1}};
  ReadMatrix rm(5, 6, entries);
  std::vector<double> values;
  MatrixXd g = MatrixXd::Zero(5, 6);
  for (const Entry& e : rm.entries()) {
    const double val = testutil::gaussian_vector(rng, 1)(0);
    values.push_back(val);
    g(e.i, e.j) = val;
  }
  const TangentVector sparse = manifold::project_tangent_sparse(x, rm, values);
  const TangentVector dense_path = project_tangent(x, g);
  CHECK(std::abs(sparse.m_scalar - dense_path.m_scalar) < 1e-12);
  CHECK((sparse.u_p - dense_path.u_p).norm() < 1e-12);
  CHECK((sparse.v_p - dense_path.v_p).norm() < 1e-12);
}

TEST_CASE("factored inner product matches the dense trace") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const RankOneFactors x = testutil::random_point(rng, 6, 5);
    const TangentVector xi = testutil::random_tangent(rng, x);
    const TangentVector eta = testutil::random_tangent(rng, x);
    const double factored = inner(x, xi, eta);
    const double dense_tr = (xi.embed(x).transpose() * eta.embed(x)).trace();
    CHECK(factored == doctest::Approx(dense_tr).epsilon(1e-10));
    CHECK(inner(x, xi, eta) == inner(x, eta, xi));
  }
  const RankOneFactors x = testutil::random_point(rng, 4, 4);
  CHECK(inner(x, TangentVector::zero(4, 4), TangentVector::zero(4, 4)) == 0.0);
}

TEST_CASE("retraction of the zero tangent returns the point unchanged") {
  std::mt19937_64 rng(27);
  const RankOneFactors x = testutil::random_point(rng, 6, 5);
  const RankOneFactors y = retract(x, TangentVector::zero(6, 5));
  CHECK(y.u() == x.u());
  CHECK(y.sigma() == x.sigma());
  CHECK(y.v() == x.v());
}

TEST_CASE("retraction outputs rank-one points") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const RankOneFactors x = testutil::random_point(rng, 6, 7);
    const TangentVector xi = testutil::random_tangent(rng, x);
    const RankOneFactors y = retract(x, xi);
    Eigen::JacobiSVD<MatrixXd> svd(x.dense() + xi.embed(x));
    CHECK(y.sigma() == doctest::Approx(svd.singularValues()(0)).epsilon(1e-8));
    // the retained triplet reproduces the oracle's best rank-one approximant
    const RankOneFactors oracle = svd_oracle(x.dense() + xi.embed(x));
    CHECK((y.dense() - oracle.dense()).norm() < 1e-7 * (1.0 + oracle.sigma()));
  }
}

TEST_CASE("retraction is locally rigid: quadratic error decay in step size") {
  std::mt19937_64 rng(31);
  const RankOneFactors x = testutil::random_point(rng, 6, 5, 1.0, 1.5);
  TangentVector xi = testutil::random_tangent(rng, x);
  const double scale = std::sqrt(inner(x, xi, xi));
  xi.m_scalar /= scale;
  xi.u_p /= scale;
  xi.v_p /= scale;

  const double steps[] = {1e-2, 1e-3, 1e-4};
  double logs_t[3];
  double logs_e[3];
  for (int k = 0; k < 3; ++k) {
    TangentVector step(steps[k] * xi.m_scalar, steps[k] * xi.u_p,
                       steps[k] * xi.v_p);
    const MatrixXd target = x.dense() + step.embed(x);
    const double err = (retract(x, step).dense() - target).norm();
    CHECK(err < steps[k]);  // o(t): far below the step itself
    logs_t[k] = std::log(steps[k]);
    logs_e[k] = std::log(err);
  }
  // least-squares slope of log err against log t
  double mt = (logs_t[0] + logs_t[1] + logs_t[2]) / 3.0;
  double me = (logs_e[0] + logs_e[1] + logs_e[2]) / 3.0;
  double num = 0.0, den = 0.0;
  for (int k = 0; k < 3; ++k) {
    num += (logs_t[k] - mt) * (logs_e[k] - me);
    den += (logs_t[k] - mt) * (logs_t[k] - mt);
  }
  const double slope = num / den;
  CHECK(slope >= 1.95);
}

TEST_CASE("retraction propagates the zero-matrix error on degenerate steps") {
  VectorXd u(2), v(2);
  u << 1, 0;
  v << 0, 1;
  RankOneFactors x(u, 1.0, v);
  // xi = -X exactly: M = -sigma, u_p = v_p = 0
  TangentVector xi(-1.0, VectorXd::Zero(2), VectorXd::Zero(2));
  CHECK_THROWS_AS(retract(x, xi), ZeroMatrixError);
}
