#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Violated operation precondition (CLI exit code 2).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CLI exit code 3).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace koszul
