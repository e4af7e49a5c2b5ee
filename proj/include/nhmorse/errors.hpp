#pragma once

#include <stdexcept>
#include <string>

namespace nhmorse {

/// Base class for every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log-gamma argument at (or within 1e-12 of) a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Kummer series with b at a nonpositive integer and no termination.
class ParameterPole : public Error {
 public:
  using Error::Error;
};

/// A series hit its term cap, or an oracle could not certify its bound.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Tricomi connection formula requested at (near-)integer b.
class IntegerB : public Error {
 public:
  using Error::Error;
};

/// Bound-state exponent is not positive.
class NonNormalizable : public Error {
 public:
  using Error::Error;
};

/// Input outside the documented domain (bad grid, a <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace nhmorse
