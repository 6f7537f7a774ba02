#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convoscale {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input record. `line()` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Too little data survived for an estimate (e.g. fewer than three regime points).
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace convoscale
