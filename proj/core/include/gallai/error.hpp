#pragma once

#include <stdexcept>
#include <string>

namespace gallai {

// Base for every error raised by the library. Callers that only need to
// distinguish "bad input" from "a guaranteed invariant broke" can catch
// Error and ConsistencyError separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degree sequence text or values that do not describe a sequence at all
// (unsorted, negative, empty, out of range).
class MalformedSequence : public Error {
 public:
  using Error::Error;
};

// A vertex, component index, or similar argument is out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Requested instance exceeds a hard size guard.
class SizeGuardViolation : public Error {
 public:
  using Error::Error;
};

// The operation is only defined for rainbow-triangle-free colorings.
class NotGallai : public Error {
 public:
  using Error::Error;
};

// A result that the underlying combinatorics guarantees could not be
// produced. Seeing one means either the input broke a precondition that
// could not be checked cheaply, or there is a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gallai
