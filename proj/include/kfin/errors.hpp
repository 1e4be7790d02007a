#pragma once

#include <stdexcept>
#include <string>

namespace kfin {

// Malformed or out-of-contract arguments (wrong degree, zero input, bad parameters).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of an operation does not hold for the input
// (e.g. a curve that is not of genus two, a space with base points).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent routes disagreed; indicates a bug or an inconsistent input.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kfin
