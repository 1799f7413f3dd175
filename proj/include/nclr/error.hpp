#pragma once

#include <stdexcept>
#include <string>

namespace nclr {

// Raised when an argument violates an operation's precondition
// (size mismatch, non-partition inner shape, illegal box addition, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when input text cannot be parsed.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an invariant guaranteed by the theory fails to hold.
// Seeing one of these means there is a bug in this library.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nclr
