#pragma once

#include <stdexcept>
#include <string>

namespace relaxcol {

// Thrown when an exhaustive routine would exceed its enumeration guard.
struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance / coloring file syntax or validation failure. line is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

}  // namespace relaxcol
