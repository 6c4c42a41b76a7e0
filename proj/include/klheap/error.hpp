#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klheap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is the 0-based character offset of the
/// offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on the mathematical input was violated (rank mismatch,
/// non-reduced word, heap of a non-321-avoiding word, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is infeasible at the configured size bounds.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace klheap
