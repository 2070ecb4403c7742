#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bgb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a mathematical function (zero height, non-unit
/// division, out-of-range degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A modular computation hit a non-unit pivot, a rank drop or a residual that
/// does not vanish. The caller is expected to restart with a fresh prime.
class UnluckyPrime : public Error {
 public:
  using Error::Error;
};

/// The input generates an ideal that is not zero-dimensional (or a matrix
/// built from it has lost rank at the current modulus).
class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

/// Randomized retries were exhausted.
class RetriesExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bgb
