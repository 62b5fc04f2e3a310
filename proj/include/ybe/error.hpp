#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented precondition (bad table, bad parameters).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An element or size cap was hit; the question is left undecided.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ybe
