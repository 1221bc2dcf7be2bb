#pragma once

#include <stdexcept>
#include <string>

namespace rtint {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not: inexact division, a failed
// postcondition, a verification mismatch. Always indicates a bug.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Input violates a mathematical hypothesis (r not prime, r <= m(g),
// unsupported Lie type, weight outside the root lattice, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A configurable resource guard tripped (iteration cap, weight too large).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rtint
