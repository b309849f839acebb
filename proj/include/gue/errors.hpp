#pragma once

#include <stdexcept>

namespace gue {

// Raised when a computation fails numerically (eigensolver stall, non-finite
// integrand) as opposed to being called with invalid parameters.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gue
