#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Bad vertex, edge, color table, or size argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input violates an operation's precondition (e.g. a host that is not
// triangle-free, an extension that does not fit the host).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Instance exceeds a word-size ceiling or an enumeration budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ramsey
