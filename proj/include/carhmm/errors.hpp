#pragma once

#include <stdexcept>
#include <string>

namespace carhmm {

// Error taxonomy mirrors CLI exit codes: validation -> 2, numerical -> 3,
// retry budget -> 4.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RetryExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace carhmm
