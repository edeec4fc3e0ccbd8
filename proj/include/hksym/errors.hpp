#pragma once

#include <stdexcept>
#include <string>

namespace hksym {

/// Malformed or out-of-contract input: bad Gram matrix, non-isometry, unknown name.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold for valid input did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hksym
