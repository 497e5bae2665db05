#pragma once

#include <stdexcept>
#include <string>

namespace veerlab {

// Malformed user input: bad tokens, strand mismatches, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical identity the library relies on failed to hold. Never caught
// silently; the CLI maps it to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace veerlab
