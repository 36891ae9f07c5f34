#pragma once

#include <stdexcept>
#include <string>

namespace copnum {

/// Raised when a caller hands us something outside an operation's domain
/// (vertex out of range, probability outside [0,1], malformed file, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured state or retry budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strategy produced a move the rules do not allow.
class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A randomized generator could not produce a valid sample.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace copnum
