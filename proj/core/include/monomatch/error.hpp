#pragma once

#include <stdexcept>
#include <string>

namespace monomatch {

// A call whose arguments violate the operation's precondition (an index or
// window past the end of a ByteText). Always a caller bug.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two StringMatcher values built for different targets were combined.
class TargetMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monomatch
