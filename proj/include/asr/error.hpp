#pragma once

#include <stdexcept>

namespace asr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed value or a value outside the operation's domain.
struct InvalidInput : Error {
  using Error::Error;
};

// Request exceeds the configured desk-scale limits.
struct ResourceLimit : Error {
  using Error::Error;
};

// The requested object does not arise from any basis set.
struct NotRealizable : Error {
  using Error::Error;
};

// A consistency assertion the theory guarantees has failed at runtime.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace asr
