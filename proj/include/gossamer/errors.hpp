#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gossamer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when a real shadow is requested for a value with an infinite part.
class InfinitePartPresent : public Error {
 public:
  explicit InfinitePartPresent(const std::string& value)
      : Error("infinite part present in " + value + "; no standard part") {}
};

/// Magnitude relations are undefined on zero.
class ZeroMagnitude : public Error {
 public:
  explicit ZeroMagnitude(const std::string& where)
      : Error(where + ": zero operand has no magnitude") {}
};

/// A precondition on the argument domain was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected +
              " in \"" + input + "\""),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace gossamer
