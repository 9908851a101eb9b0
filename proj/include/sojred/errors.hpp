#pragma once

#include <stdexcept>
#include <string>

namespace sojred {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Invalid parameters for a group generator (out-of-range index, odd q for B).
struct BadParams : Error {
  using Error::Error;
};

/// Characteristic polynomial has repeated roots (zero discriminant).
struct RepeatedRoots : Error {
  using Error::Error;
};

struct NotStable : Error {
  using Error::Error;
};

/// Iterative solver hit its sweep cap before reaching tolerance.
struct NonConvergence : Error {
  using Error::Error;
};

/// A quantity that must be strictly positive came out <= 0 numerically.
struct NonPositive : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// Requested tolerance unreachable at the available working precisions.
struct PrecisionExhausted : Error {
  using Error::Error;
};

struct IterationCapExceeded : Error {
  using Error::Error;
};

/// Malformed input; carries a 1-based location when one is known.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& what, int line_ = 0, int column_ = 0)
      : Error(what), line(line_), column(column_) {}
};

}  // namespace sojred
