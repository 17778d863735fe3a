#pragma once

#include <stdexcept>
#include <string>

namespace liftcert {

// Malformed input text (edge lists, model JSON, config files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation was refused because its estimated cost exceeds a configured
// cap. The message carries the estimate so callers can raise the cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arguments violate a documented precondition (non-symmetric matrix,
// negative weights, mixed scalar tags where a single tag is required, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace liftcert
