#pragma once

#include <stdexcept>
#include <string>

namespace k2forge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown family, missing flag, unreadable JSON.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied input violates an operation's precondition
/// (repeated nodes, singular member of a family, excluded parameter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The support of a symbol or divisor is not made of rational points.
class RationalSupportError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A certificate did not verify. Raised by generators, which never return
/// unverified records.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated (Bézout bound exceeded, ord bookkeeping
/// inconsistent). Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace k2forge
