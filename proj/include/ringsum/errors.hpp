#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringsum {

// Base of every library error. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid ring-spec / polynomial text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Input is well formed but the requested operation does not apply to it
// (non-commutative ring for a closed form, non-prime-power order, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Enumeration bound, rewrite budget or integer range exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Closed form and brute force disagree. Always a bug; known table misprints
// are reported as data instead.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringsum
