#pragma once

#include <stdexcept>

namespace brittle {

/// Raised when an exact computation would exceed its configured caps.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace brittle
