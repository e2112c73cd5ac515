#pragma once

#include <cstdint>

#include "haplo/types.hpp"

namespace haplo::metrics {

/// Hamming distance of row i of rm against h, counted over observed entries.
std::int64_t hamming_row(const ReadMatrix& rm, int i, const Haplotype& h);

/// Minimum error correction: sum over rows of
/// min(hamming_row(i, h), hamming_row(i, -h)).
std::int64_t mec(const ReadMatrix& rm, const Haplotype& h);

/// Hamming distance between haplotypes, minimized over the global sign flip
/// of the estimate.
std::int64_t haplotype_distance(const Haplotype& h_true, const Haplotype& h_est);

/// Normalized mean square error ||r_true - r_est||_F^2 / ||r_true||_F^2.
double nmse(const MatrixXd& r_true, const MatrixXd& r_est);

/// Number of observed entries whose sign disagrees with sign(x_ij); entries
/// with x_ij = 0 count as discrepancies and are reported in *zero_count when
/// provided.
std::int64_t sign_discrepancy(const ReadMatrix& rm, const RankOneFactors& x,
                              std::int64_t* zero_count = nullptr);

/// Same count against an arbitrary dense matrix.
std::int64_t sign_discrepancy(const ReadMatrix& rm, const MatrixXd& x,
                              std::int64_t* zero_count = nullptr);

}  // namespace haplo::metrics
