#pragma once

#include <stdexcept>
#include <string>

namespace haplo {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
  using Error::Error;
};

class LengthMismatchError : public Error {
public:
  using Error::Error;
};

// Input matrix is identically zero; no dominant singular triplet exists.
class ZeroMatrixError : public Error {
public:
  using Error::Error;
};

// Power iteration failed to reach the requested residual tolerance.
class NoConvergenceError : public Error {
public:
  using Error::Error;
};

class ZeroTruthError : public Error {
public:
  using Error::Error;
};

// Sampling produced an empty observation set even after reseeding.
class EmptyObservationError : public Error {
public:
  using Error::Error;
};

class EmptyRowOrColumnError : public Error {
public:
  using Error::Error;
};

// A least-squares denominator collapsed during alternating minimization.
class DegenerateUpdateError : public Error {
public:
  using Error::Error;
};

// Armijo backtracking exhausted max_backtracks without sufficient decrease.
class LineSearchFailureError : public Error {
public:
  using Error::Error;
};

// Initial point violates the descent precondition f(X0) < |Omega|.
class InadmissibleStartError : public Error {
public:
  InadmissibleStartError(const std::string& what, double f0, long long omega)
      : Error(what), f0(f0), omega(omega) {}
  double f0;
  long long omega;
};

// Malformed input file; message carries file name and line number.
class ParseError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace haplo
