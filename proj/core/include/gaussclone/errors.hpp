#pragma once

#include <stdexcept>
#include <string>

namespace gaussclone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad dimension, negative
/// noise, off-surface profile, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested cloner does not exist: no non-negative noise satisfies the
/// optimality constraint for the given inputs.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure (root bracketing, unitary completion) failed.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussclone
