#pragma once

#include <stdexcept>
#include <string>

namespace mhpp {

/// Malformed or out-of-contract input data (bad JSON, violated precondition).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size guard (term cap, enumeration limit) was exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mhpp
