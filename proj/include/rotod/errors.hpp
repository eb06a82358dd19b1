#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotod {

/// Malformed textual input. `position` is the zero-based offset of the
/// offending character in the input string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An argument violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cell map would exceed the configured cell budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A diagram path does not compose, or an operation was applied outside
/// its domain (e.g. successor of a path on a level that does not exist).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rotod
