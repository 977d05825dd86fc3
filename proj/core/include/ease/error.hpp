#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ease {

// Precondition violations (bad flags, out-of-range fractions, lambda <= 0)
// are reported as std::invalid_argument. Everything below is a runtime
// failure of otherwise well-formed requests.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input record; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// Bad or truncated on-disk file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Two artifacts were built over different item vocabularies.
class VocabMismatchError : public Error {
 public:
  using Error::Error;
};

/// The regularized Gram matrix could not be factorized.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& message, std::size_t index, double pivot)
      : Error(message), index_(index), pivot_(pivot) {}

  std::size_t index() const noexcept { return index_; }
  double pivot() const noexcept { return pivot_; }

 private:
  std::size_t index_;
  double pivot_;
};

}  // namespace ease
