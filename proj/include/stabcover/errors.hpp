#pragma once

#include <stdexcept>
#include <string>

namespace stabcover {

// Maps to CLI exit code 1.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Maps to CLI exit code 2. Raised when a charge path fails the genericity
// requirements of the lifter (tangent wall hit, coincident crossing times,
// endpoint on a wall, or a sign change of Im Z(delta) away from the fully
// degenerate configuration).
struct NonGenericPath : std::runtime_error {
  explicit NonGenericPath(const std::string& msg) : std::runtime_error(msg) {}
};

// Maps to CLI exit code 3; always a bug.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace stabcover
