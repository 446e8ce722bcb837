#pragma once

#include <stdexcept>
#include <string>

namespace latcount {

/// Malformed or inconsistent input data (bad JSON, wrong dimensions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an algorithm does not hold for the given
/// data, e.g. <l, b> = 0 for some denominator vector, or an unbounded fiber.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latcount
