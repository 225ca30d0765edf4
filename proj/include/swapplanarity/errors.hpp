#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapplanarity {

// in_circle() on three collinear points has no circumcircle.
class DegenerateTriangle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the generation pipeline: point sampling gave up, edge removal got
// stuck, or the shuffle budget ran out.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The breadth-first search hit its state cap. Distinct from "not found within
// the depth budget", which is a normal SolveReport outcome.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A target assignment moves points between connected components.
class UnreachableTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration refused because the assignment space is too large.
class EnumerationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed instance text. `position` is a byte offset into the input, or
// npos when the problem is structural rather than syntactic.
class InstanceFormatError : public std::runtime_error {
 public:
  InstanceFormatError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A well-formed instance file that breaks one or more instance invariants.
class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swapplanarity
