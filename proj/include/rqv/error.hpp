#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rqv {

/// Raised when a caller violates an operation's precondition (bad vertex id,
/// infeasible parameters, disconnected input where connectivity is required).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// graph6 decoding failure; `offset` is the zero-based byte position of the
/// first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// An a-posteriori eigenvalue bracket came out wider than the requested
/// tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rqv
