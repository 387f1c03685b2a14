#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Empty operands, mismatched shapes, zero-sized dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the mathematical domain of an operation (p < 1, n < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No exact evaluation path exists for the requested norm.
class UnsupportedNormError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A zero matrix where a nonzero one is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// The analytic sandwich lower <= estimate <= upper was violated.
class SandwichViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mmt
