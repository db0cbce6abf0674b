#pragma once

#include <stdexcept>
#include <string>

namespace spherelevels {

// Base of every recoverable error raised by the library. The CLI maps all of
// these to exit status 2 (input/usage error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SPHERELEVELS_ERROR(Name)                 \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  }

SPHERELEVELS_ERROR(OnCircleError);
SPHERELEVELS_ERROR(DegenerateError);
SPHERELEVELS_ERROR(OnEquatorError);
SPHERELEVELS_ERROR(DegeneracyError);
SPHERELEVELS_ERROR(BuildError);
SPHERELEVELS_ERROR(PreconditionError);
SPHERELEVELS_ERROR(RangeError);
SPHERELEVELS_ERROR(ConvergenceError);
SPHERELEVELS_ERROR(OverflowError);
SPHERELEVELS_ERROR(BudgetError);
SPHERELEVELS_ERROR(ParseError);

#undef SPHERELEVELS_ERROR

}  // namespace spherelevels
