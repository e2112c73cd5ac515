#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "example1.hpp"
#include "haplo/baselines.hpp"
#include "haplo/datagen.hpp"
#include "haplo/metrics.hpp"
#include "test_util.hpp"

using namespace haplo;

namespace {

ReadMatrix fully_observed_demo() {
  std::vector<Entry> entries;
  const MatrixXi full = demo::rbar();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) {
      entries.push_back(Entry{i, j, full(i, j)});
    }
  }
  return ReadMatrix(3, 5, std::move(entries));
}

Haplotype sign_haplotype(const VectorXd& v) {
  VectorXi s(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    s(j) = v(j) >= 0.0 ? 1 : -1;
  }
  return Haplotype(s);
}

}  // namespace

TEST_CASE("altmin factorizes an error-free fully observed matrix exactly") {
  const auto res = baselines::altmin_factorize(fully_observed_demo());
  const MatrixXd approx = res.u * res.v.transpose();
  CHECK((approx - demo::rbar().cast<double>()).norm() < 1e-8);
  CHECK(metrics::haplotype_distance(Haplotype(demo::h1()),
                                    sign_haplotype(res.v)) == 0);
}

TEST_CASE("altmin on a single observation") {
  const ReadMatrix rm(1, 1, {{0, 0, 1}});
  const auto res = baselines::altmin_factorize(rm);
  CHECK(res.u(0) * res.v(0) == doctest::Approx(1.0));
}

TEST_CASE("altmin objective trace is non-increasing") {
  const auto inst = datagen::generate(datagen::InstanceSpec(20, 25, 0.4, 0.2, 33));
  const auto res = baselines::altmin_factorize(inst.rm);
  REQUIRE(res.objective_trace.size() >= 2);
  for (std::size_t k = 1; k < res.objective_trace.size(); ++k) {
    CHECK(res.objective_trace[k] <= res.objective_trace[k - 1] + 1e-12);
  }
  CHECK(res.objective == doctest::Approx(res.objective_trace.back()));
}

TEST_CASE("altmin requires observations in every row and column") {
  // row 1 empty
  CHECK_THROWS_AS(
      baselines::altmin_factorize(ReadMatrix(2, 2, {{0, 0, 1}, {0, 1, -1}})),
      EmptyRowOrColumnError);
  // column 1 empty
  CHECK_THROWS_AS(
      baselines::altmin_factorize(ReadMatrix(2, 2, {{0, 0, 1}, {1, 0, -1}})),
      EmptyRowOrColumnError);
}

TEST_CASE("altmin surfaces degenerate update denominators") {
  // Row 0 observes only column 0, which carries no weight in the dominant
  // right singular vector, so the first u-update divides by ~0.
  const ReadMatrix rm(2, 3, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(baselines::altmin_factorize(rm), DegenerateUpdateError);
}

TEST_CASE("frobenius manifold solve reaches the known demo residual") {
  const auto res =
      baselines::frobenius_manifold_solve(demo::observed(), SolverConfig{});
  const double residual = std::sqrt(res.cost_trace.back());
  CHECK(residual == doctest::Approx(2.8284).epsilon(0.004));
}

TEST_CASE("the two printed demo completions yield different haplotypes") {
  // haplotypes extracted from the dominant right singular vectors
  const RankOneFactors xa =
      manifold::top_singular_triplet(demo::completion_a());
  const Haplotype ha = solver::extract_haplotype(xa);
  const Haplotype hb = solver::extract_haplotype(demo::completion_b_factors());
  CHECK(ha.values == demo::h1());
  CHECK(hb.values == demo::h2());
  CHECK(metrics::haplotype_distance(ha, hb) == 1);
}

TEST_CASE("frobenius solve recovers an error-free fully observed matrix") {
  const auto res =
      baselines::frobenius_manifold_solve(fully_observed_demo(), SolverConfig{});
  CHECK(res.cost_trace.back() < 1e-10);
  CHECK(metrics::haplotype_distance(Haplotype(demo::h1()), res.haplotype) == 0);
}

TEST_CASE("frobenius gradient matches central finite differences") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const auto inst = datagen::generate(
        datagen::InstanceSpec(8, 9, 0.5, 0.2, 2100 + trial));
    const RankOneFactors x = testutil::random_point(rng, 8, 9);
    const MatrixXd g = baselines::frobenius_euclidean_gradient(inst.rm, x);
    const MatrixXd d = testutil::gaussian_matrix(rng, 8, 9);
    const double t = 1e-6;
    auto cost_at = [&](const MatrixXd& a) {
      double total = 0.0;
      for (const Entry& e : inst.rm.entries()) {
        const double r = static_cast<double>(e.v) - a(e.i, e.j);
        total += r * r;
      }
      return total;
    };
    const MatrixXd xd = x.dense();
    const double fd = (cost_at(xd + t * d) - cost_at(xd - t * d)) / (2.0 * t);
    const double ip = (g.array() * d.array()).sum();
    CHECK(std::abs(fd - ip) <= 1e-6 * std::max(1.0, std::abs(ip)));
  }
}

TEST_CASE("both baselines recover noiseless instances") {
  for (int trial = 0; trial < 3; ++trial) {
    const auto inst = datagen::generate(
        datagen::InstanceSpec(15, 18, 0.5, 0.0, 2300 + trial));
    const Haplotype truth(inst.gt.h);

    const auto fro = baselines::frobenius_manifold_solve(inst.rm, SolverConfig{});
    CHECK(metrics::haplotype_distance(truth, fro.haplotype) == 0);

    const auto alt = baselines::altmin_factorize(inst.rm);
    CHECK(metrics::haplotype_distance(truth, sign_haplotype(alt.v)) == 0);
  }
}
