// Shared 3x5 demo fixture: a fully determined ground truth, an observation
// set with one missing entry and three sign-corrupted reads, plus the two
// competing completions used by the golden metric tests.
#pragma once

#include <vector>

#include "haplo/types.hpp"

namespace demo {

inline haplo::VectorXi h1() {
  haplo::VectorXi h(5);
  h << 1, -1, 1, -1, -1;
  return h;
}

inline haplo::VectorXi h2() {
  haplo::VectorXi h(5);
  h << 1, -1, -1, -1, -1;
  return h;
}

inline haplo::VectorXi ones_c() {
  haplo::VectorXi c(3);
  c << 1, 1, 1;
  return c;
}

inline haplo::GroundTruth truth() { return {h1(), ones_c()}; }

// Expected full matrix c * h^T.
inline haplo::MatrixXi rbar() {
  haplo::MatrixXi r(3, 5);
  r << 1, -1, 1, -1, -1,
       1, -1, 1, -1, -1,
       1, -1, 1, -1, -1;
  return r;
}

// Observed matrix: entry (0,1) unobserved; signs flipped at (0,4), (1,0)
// and (2,2).
inline haplo::ReadMatrix observed() {
  std::vector<haplo::Entry> e{
      {0, 0, +1}, {0, 2, +1}, {0, 3, -1}, {0, 4, +1},
      {1, 0, -1}, {1, 1, -1}, {1, 2, +1}, {1, 3, -1}, {1, 4, -1},
      {2, 0, +1}, {2, 1, -1}, {2, 2, -1}, {2, 3, -1}, {2, 4, -1},
  };
  return haplo::ReadMatrix(3, 5, std::move(e));
}

// First competing completion (printed to 4 digits); exactly the values the
// sign counts are taken from.
inline haplo::MatrixXd completion_a() {
  haplo::MatrixXd r(3, 5);
  r << 0.2255, -0.763, 0.2255, -0.8165, -0.3655,
       0.2955, -1.0,   0.2955, -1.07,   -0.479,
       0.2955, -1.0,   0.2955, -1.07,   -0.479;
  return r;
}

// Second competing completion, an exact rank-one matrix parameterized by two
// small positives.
inline haplo::MatrixXd completion_b(double eps = 1e-6, double gamma = 1e-6) {
  haplo::VectorXd a(3), b(5);
  a << -eps, 1.0, 1.0;
  b << gamma, -0.9975, -gamma, -0.9975, -0.9975;
  return a * b.transpose();
}

inline haplo::RankOneFactors completion_b_factors(double eps = 1e-6,
                                                  double gamma = 1e-6) {
  haplo::VectorXd a(3), b(5);
  a << -eps, 1.0, 1.0;
  b << gamma, -0.9975, -gamma, -0.9975, -0.9975;
  return haplo::RankOneFactors::from_outer(a, b);
}

}  // namespace demo
