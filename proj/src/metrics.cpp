#include "haplo/metrics.hpp"

#include <algorithm>

namespace haplo::metrics {

std::int64_t hamming_row(const ReadMatrix& rm, int i, const Haplotype& h) {
  if (i < 0 || i >= rm.rows()) {
    throw IndexOutOfRangeError("row index out of range");
  }
  if (h.size() != rm.cols()) {
    throw LengthMismatchError("haplotype length does not match read matrix");
  }
  const auto [begin, end] = rm.row_range(i);
  std::int64_t mismatches = 0;
  for (std::size_t k = begin; k < end; ++k) {
    const Entry& e = rm.entries()[k];
    if (e.v != h.values(e.j)) {
      ++mismatches;
    }
  }
  return mismatches;
}

std::int64_t mec(const ReadMatrix& rm, const Haplotype& h) {
  if (h.size() != rm.cols()) {
    throw LengthMismatchError("haplotype length does not match read matrix");
  }
  Haplotype neg(VectorXi(-h.values));
  std::int64_t total = 0;
  for (int i = 0; i < rm.rows(); ++i) {
    total += std::min(hamming_row(rm, i, h), hamming_row(rm, i, neg));
  }
  return total;
}

std::int64_t haplotype_distance(const Haplotype& h_true,
                                const Haplotype& h_est) {
  if (h_true.size() != h_est.size()) {
    throw LengthMismatchError("haplotypes have different lengths");
  }
  std::int64_t direct = 0;
  std::int64_t flipped = 0;
  for (int j = 0; j < h_true.size(); ++j) {
    if (h_true.values(j) != h_est.values(j)) {
      ++direct;
    } else {
      ++flipped;
    }
  }
  return std::min(direct, flipped);
}

double nmse(const MatrixXd& r_true, const MatrixXd& r_est) {
  if (r_true.rows() != r_est.rows() || r_true.cols() != r_est.cols()) {
    throw DimensionMismatchError("estimate does not match truth");
  }
  const double denom = r_true.squaredNorm();
  if (denom == 0.0) {
    throw ZeroTruthError("true matrix is identically zero");
  }
  return (r_true - r_est).squaredNorm() / denom;
}

std::int64_t sign_discrepancy(const ReadMatrix& rm, const RankOneFactors& x,
                              std::int64_t* zero_count) {
  if (rm.rows() != x.rows() || rm.cols() != x.cols()) {
    throw DimensionMismatchError("factors do not match read matrix");
  }
  std::int64_t zeros = 0;
  std::int64_t mismatches = 0;
  for (const Entry& e : rm.entries()) {
    const double xij = x.entry(e.i, e.j);
    if (xij == 0.0) {
      ++zeros;
      ++mismatches;
    } else if ((xij > 0.0 ? 1 : -1) != e.v) {
      ++mismatches;
    }
  }
  if (zero_count != nullptr) {
    *zero_count = zeros;
  }
  return mismatches;
}

std::int64_t sign_discrepancy(const ReadMatrix& rm, const MatrixXd& x,
                              std::int64_t* zero_count) {
  if (rm.rows() != x.rows() || rm.cols() != x.cols()) {
    throw DimensionMismatchError("matrix does not match read matrix");
  }
  std::int64_t zeros = 0;
  std::int64_t mismatches = 0;
  for (const Entry& e : rm.entries()) {
    const double xij = x(e.i, e.j);
    if (xij == 0.0) {
      ++zeros;
      ++mismatches;
    } else if ((xij > 0.0 ? 1 : -1) != e.v) {
      ++mismatches;
    }
  }
  if (zero_count != nullptr) {
    *zero_count = zeros;
  }
  return mismatches;
}

}  // namespace haplo::metrics
