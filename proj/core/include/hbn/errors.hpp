#pragma once

#include <stdexcept>
#include <string>

namespace hbn {

/// Malformed or out-of-contract arguments supplied by a caller.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two splitting types that live in different (length, degree) classes.
class incomparable_error : public input_error {
 public:
  using input_error::input_error;
};

}  // namespace hbn
