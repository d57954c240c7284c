#pragma once

#include <stdexcept>
#include <string>

namespace gnl {

/// Bad input: malformed files, unknown labels, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gnl
