#include "haplo/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace haplo::io {

namespace {

struct Token {
  std::string text;
  int line;
};

// Whitespace-separated tokens with their 1-based line numbers; lines whose
// first non-blank character is '#' are comments.
std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) {
      tokens.push_back(Token{word, lineno});
    }
  }
  return tokens;
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  std::ostringstream msg;
  msg << name << ":" << line << ": " << what;
  throw ParseError(msg.str());
}

class TokenReader {
public:
  TokenReader(std::istream& in, std::string name)
      : tokens_(tokenize(in)), name_(std::move(name)) {}

  bool done() const { return pos_ >= tokens_.size(); }

  long long next_int(const char* what) {
    if (done()) {
      std::ostringstream msg;
      msg << name_ << ": unexpected end of input, expected " << what;
      throw ParseError(msg.str());
    }
    const Token& t = tokens_[pos_++];
    long long value = 0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    if (*begin == '+') {
      ++begin;  // tolerate explicit plus on signs
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      fail(name_, t.line, std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return value;
  }

  int last_line() const {
    return pos_ > 0 ? tokens_[pos_ - 1].line : 0;
  }

  const std::string& name() const { return name_; }

private:
  std::vector<Token> tokens_;
  std::string name_;
  std::size_t pos_ = 0;
};

int checked_sign(TokenReader& r, const char* what) {
  const long long v = r.next_int(what);
  if (v != 1 && v != -1) {
    fail(r.name(), r.last_line(), std::string(what) + " must be -1 or 1");
  }
  return static_cast<int>(v);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  return out;
}

}  // namespace

ReadMatrix read_matrix(std::istream& in, const std::string& name) {
  TokenReader r(in, name);
  const long long m = r.next_int("row count");
  const long long n = r.next_int("column count");
  if (m < 1 || n < 1) {
    fail(name, r.last_line(), "dimensions must be >= 1");
  }
  std::vector<Entry> entries;
  std::unordered_set<std::int64_t> seen;
  while (!r.done()) {
    const long long i = r.next_int("row index");
    const int line = r.last_line();
    const long long j = r.next_int("column index");
    const int v = checked_sign(r, "entry value");
    if (i < 1 || i > m || j < 1 || j > n) {
      std::ostringstream msg;
      msg << "entry (" << i << "," << j << ") outside 1.." << m << " x 1.." << n;
      fail(name, line, msg.str());
    }
    const std::int64_t key = (i - 1) * n + (j - 1);
    if (!seen.insert(key).second) {
      std::ostringstream msg;
      msg << "duplicate entry (" << i << "," << j << ")";
      fail(name, line, msg.str());
    }
    entries.push_back(Entry{static_cast<int>(i - 1), static_cast<int>(j - 1), v});
  }
  return ReadMatrix(static_cast<int>(m), static_cast<int>(n), std::move(entries));
}

ReadMatrix read_matrix_file(const std::string& path) {
  auto in = open_input(path);
  return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const ReadMatrix& rm) {
  out << "# read matrix: dimensions, then one observed entry per line (1-based i j v)\n";
  out << rm.rows() << " " << rm.cols() << "\n";
  for (const Entry& e : rm.entries()) {
    out << e.i + 1 << " " << e.j + 1 << " " << e.v << "\n";
  }
}

void write_matrix_file(const std::string& path, const ReadMatrix& rm) {
  auto out = open_output(path);
  write_matrix(out, rm);
  if (!out) {
    throw IoError("failed writing " + path);
  }
}

GroundTruth read_ground_truth(std::istream& in, const std::string& name) {
  TokenReader r(in, name);
  const long long n = r.next_int("haplotype length");
  if (n < 1) {
    fail(name, r.last_line(), "haplotype length must be >= 1");
  }
  VectorXi h(n);
  for (long long j = 0; j < n; ++j) {
    h(j) = checked_sign(r, "haplotype entry");
  }
  const long long m = r.next_int("orientation length");
  if (m < 1) {
    fail(name, r.last_line(), "orientation length must be >= 1");
  }
  VectorXi c(m);
  for (long long i = 0; i < m; ++i) {
    c(i) = checked_sign(r, "orientation entry");
  }
  if (!r.done()) {
    fail(name, r.last_line(), "trailing data after ground truth");
  }
  return GroundTruth(std::move(h), std::move(c));
}

GroundTruth read_ground_truth_file(const std::string& path) {
  auto in = open_input(path);
  return read_ground_truth(in, path);
}

void write_ground_truth(std::ostream& out, const GroundTruth& gt) {
  out << "# ground truth: haplotype length, haplotype, orientation length, orientations\n";
  out << gt.h.size() << "\n";
  for (Eigen::Index j = 0; j < gt.h.size(); ++j) {
    out << (j > 0 ? " " : "") << gt.h(j);
  }
  out << "\n" << gt.c.size() << "\n";
  for (Eigen::Index i = 0; i < gt.c.size(); ++i) {
    out << (i > 0 ? " " : "") << gt.c(i);
  }
  out << "\n";
}

void write_ground_truth_file(const std::string& path, const GroundTruth& gt) {
  auto out = open_output(path);
  write_ground_truth(out, gt);
  if (!out) {
    throw IoError("failed writing " + path);
  }
}

Haplotype read_haplotype(std::istream& in, const std::string& name) {
  TokenReader r(in, name);
  const long long n = r.next_int("haplotype length");
  if (n < 1) {
    fail(name, r.last_line(), "haplotype length must be >= 1");
  }
  VectorXi h(n);
  for (long long j = 0; j < n; ++j) {
    h(j) = checked_sign(r, "haplotype entry");
  }
  if (!r.done()) {
    fail(name, r.last_line(), "trailing data after haplotype");
  }
  return Haplotype(std::move(h));
}

Haplotype read_haplotype_file(const std::string& path) {
  auto in = open_input(path);
  return read_haplotype(in, path);
}

void write_haplotype(std::ostream& out, const Haplotype& h) {
  out << h.values.size() << "\n";
  for (Eigen::Index j = 0; j < h.values.size(); ++j) {
    out << (j > 0 ? " " : "") << h.values(j);
  }
  out << "\n";
}

void write_haplotype_file(const std::string& path, const Haplotype& h) {
  auto out = open_output(path);
  write_haplotype(out, h);
  if (!out) {
    throw IoError("failed writing " + path);
  }
}

}  // namespace haplo::io
