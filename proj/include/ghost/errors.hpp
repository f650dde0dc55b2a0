#pragma once

#include <stdexcept>
#include <string>

namespace ghost {

// Bad arguments from calling code (dimension mismatches, out-of-range enums).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scenario / configuration problems. CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature refinement did not converge, or a matrix failed validation.
// CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zero-probability post-selection branch and friends.
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ghost
