#pragma once

#include <stdexcept>
#include <string>

namespace framex {

/// Raised when caller-supplied parameters violate an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical kernel fails to converge or produces
/// non-finite output.
class NumericalFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace framex
