#pragma once

#include <stdexcept>
#include <string>

namespace plt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed source text; carries "line:col: message"
struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line, col;
};

struct TypeError : Error {
  using Error::Error;
};

// the step bound was hit during normalization; typed terms always
// normalize, so this signals a bug (or an untyped input)
struct FuelError : Error {
  using Error::Error;
};

// a diagram, table or register update violates a structural invariant
struct ValidationError : Error {
  using Error::Error;
};

// a normal form did not match the expected syntactic shape
struct ShapeError : Error {
  using Error::Error;
};

}  // namespace plt
