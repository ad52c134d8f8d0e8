#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mapkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A size or parameter exceeded a configured enumeration bound.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

/// A derived table did not reproduce a stated cardinality.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mapkit
