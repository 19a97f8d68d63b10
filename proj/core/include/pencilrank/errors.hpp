#pragma once

#include <stdexcept>
#include <string>

namespace pencilrank {

/// Malformed or out-of-contract user input (bad file, bad parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_internal(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace pencilrank
