#pragma once

#include <stdexcept>
#include <string>

namespace pham {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentOutOfRange : Error {
  using Error::Error;
};

/// A truncated series hit its term budget before the certified tail bound
/// met the requested tolerance.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct NotUnitModulus : Error {
  using Error::Error;
};

struct NotConvexWeights : Error {
  using Error::Error;
};

/// Root solver could not certify a sign change inside (0, r_cap).
struct BracketFailure : Error {
  using Error::Error;
};

/// Coefficient CSV schema or parse violation. `line` is 1-based and counts
/// comment and header lines.
struct CsvFormatError : Error {
  int line;
  CsvFormatError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace pham
