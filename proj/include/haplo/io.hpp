#pragma once

#include <iosfwd>
#include <string>

#include "haplo/types.hpp"

namespace haplo::io {

// Read-matrix text format: first data line "m n", then one observed entry
// per line as "i j v" with 1-based indices and v in {-1, 1}.  Lines starting
// with '#' and blank lines are skipped.  Ground-truth format: "n", the n
// entries of h, "m", the m entries of c.  Haplotype format: "n" then the n
// entries.  Indices are converted to 0-based at this boundary.

ReadMatrix read_matrix(std::istream& in, const std::string& name = "<stream>");
ReadMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ReadMatrix& rm);
void write_matrix_file(const std::string& path, const ReadMatrix& rm);

GroundTruth read_ground_truth(std::istream& in,
                              const std::string& name = "<stream>");
GroundTruth read_ground_truth_file(const std::string& path);
void write_ground_truth(std::ostream& out, const GroundTruth& gt);
void write_ground_truth_file(const std::string& path, const GroundTruth& gt);

Haplotype read_haplotype(std::istream& in, const std::string& name = "<stream>");
Haplotype read_haplotype_file(const std::string& path);
void write_haplotype(std::ostream& out, const Haplotype& h);
void write_haplotype_file(const std::string& path, const Haplotype& h);

}  // namespace haplo::io
