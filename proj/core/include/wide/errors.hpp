#pragma once

#include <stdexcept>
#include <string>

namespace wide {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid domain/range parameters (non-positive lengths, N < 4, p <= 1, ...).
class InvalidDomainError : public Error {
 public:
  using Error::Error;
};

// Two objects that must live on the same grid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// A combination the discretization does not support
// (e.g. spectral fractional term on a Dirichlet grid).
class UnsupportedCombinationError : public Error {
 public:
  using Error::Error;
};

// Pinned initial rows of a space-time field do not match the problem data.
class ConstraintViolationError : public Error {
 public:
  using Error::Error;
};

// Non-finite numbers where there should be none; message names the site.
class NumericalBreakdownError : public Error {
 public:
  using Error::Error;
};

// Config-text problems; carries the 1-based line number (0 = whole file).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Filesystem failures, message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wide
