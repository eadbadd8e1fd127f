#pragma once

#include <stdexcept>
#include <string>

namespace cwlab {

// Caller supplied something outside an operation's contract.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested computation is larger than the brute-force guard allows.
class GuardExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Exact integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Two routes that must agree did not. Always a bug.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cwlab
