#pragma once

#include <stdexcept>

namespace cartpole {

// A file could not be opened or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file content; the message names the first bad line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cartpole
