#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pseudoham {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad parameters, wrong graph kind).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A size or memory cap would be exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace pseudoham
