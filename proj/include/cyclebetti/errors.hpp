#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclebetti {

/// Two operands live in polynomial rings with different variable counts.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside an operation's documented range.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed ideal expression; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size cap (e.g. the lcm-lattice cap) was hit.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that must hold by construction was violated, such as a
/// negative value where a Betti number was expected.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclebetti
