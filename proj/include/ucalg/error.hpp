#pragma once

#include <stdexcept>
#include <string>

namespace ucalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad partition string, non-monotone parts, bad rational.
struct InvalidInput : Error {
  using Error::Error;
};

// Division by zero or inversion of a series with no invertible leading term.
struct DivisionByZero : Error {
  using Error::Error;
};

// Mixing incompatible coefficient domains or series parameters.
struct DomainMismatch : Error {
  using Error::Error;
};

// An operation would need a variable index beyond the ring cutoffs.
struct CutoffExceeded : Error {
  using Error::Error;
};

}  // namespace ucalg
