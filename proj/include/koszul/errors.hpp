#pragma once

#include <stdexcept>

namespace koszul {

// Malformed user input: bad JSON shape, out-of-range indices, inconsistent sizes.
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested degree needs a dense tensor-word space beyond the supported bound.
struct degree_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input file could not be opened or read.
struct file_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace koszul
