#pragma once

#include <stdexcept>
#include <string>

namespace tsat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (formula, base file, lasso file, QBF file).
struct ParseError : Error {
  ParseError(const std::string& msg, size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

// Wrong argument count / argument outside a documented precondition.
struct ArgumentError : Error {
  using Error::Error;
};

// Formula uses functions or temporal operators outside the chosen fragment.
struct FragmentError : Error {
  using Error::Error;
};

// A configured work limit (lasso enumeration, atom cap) was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// An internal guarantee failed; indicates a bug, not bad input.
struct InvariantError : Error {
  using Error::Error;
};

// Bounded synthesis exhausted its size cap without finding a realization.
// Inconclusive: says nothing about nonexistence.
struct SynthError : Error {
  using Error::Error;
};

}  // namespace tsat
