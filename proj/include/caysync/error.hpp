#pragma once

#include <stdexcept>
#include <string>

namespace caysync {

// Base for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad values passed to an operation (invalid order, threshold, index, ...).
struct invalid_argument_error : error {
  using error::error;
};

// A Cayley table that is not a Latin square, has no identity, or is not
// associative.
struct malformed_group_error : error {
  using error::error;
};

// An exhaustive computation would exceed its configured cap.
struct resource_limit_error : error {
  using error::error;
};

// Unparseable user input (unknown element label, bad group spec, ...).
struct usage_error : error {
  using error::error;
};

}  // namespace caysync
