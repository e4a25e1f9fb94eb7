#pragma once

#include <stdexcept>
#include <string>

namespace cnmge {

/// Base class for every error raised by the solver pipeline.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot of the LU factorization fell below the singularity threshold.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A function evaluation produced NaN or Inf.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Input for which a quantity is undefined (e.g. a ratio with a zero denominator).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point coincides with a deflated root.
class AtRootError : public Error {
 public:
  using Error::Error;
};

/// Candidate root lies within the duplicate tolerance of a registered root.
class DuplicateError : public Error {
 public:
  using Error::Error;
};

/// No start point produced a stationary point.
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnmge
