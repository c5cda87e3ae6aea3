#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specht {

// Malformed textual input (polynomials, partitions, JSON fields).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A documented operation precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate or cross-check failed to verify.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specht
