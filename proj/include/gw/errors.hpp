#pragma once

#include <stdexcept>
#include <string>

namespace gw {

// Mathematically invalid request: division by zero, degenerate localization
// weight, unsupported genus. The CLI maps this to exit code 1.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown ids, schema violations. Exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gw
