#pragma once

#include <stdexcept>

namespace warpcheck {

/* Raised when a decision cannot finish: solver budget exhausted, an
   external solver requested but unavailable, a timeout, or `unknown`. */
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace warpcheck
