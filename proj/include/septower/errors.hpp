#pragma once

#include <stdexcept>
#include <string>

namespace septower {

/// Base of every error raised by the library. The CLI maps the subclasses onto
/// its exit codes (input errors 2, resource errors 3, everything else 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: syntax errors, field mismatches, reducible defining
/// polynomials, violated preconditions of a public operation.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A caller violated a documented precondition (e.g. asked for a primitive
/// element of an inseparable extension).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A bounded search ran out of budget. Never a wrong answer, only no answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The requested analysis is not available for this class of extension.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A splitting context does not contain enough roots for the query.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree by theory disagreed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace septower
