#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charclass {

// Every error raised by the library derives from Error. The CLI maps each
// family to a stable exit code (see exit_code()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 5; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  int exit_code() const noexcept override { return 2; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// Random scalars landed outside the generic open set and the retry budget ran out.
class GenericityError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// Input outside the supported domain (zero ideal, degree >= p, too many generators, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

// A zero-dimensional count was requested for an ideal that is not zero-dimensional.
class DimensionError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Invariant violation inside the library (e.g. an exact division that left a remainder).
class InternalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 6; }
};

class TimeoutError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 7; }
};

}  // namespace charclass
