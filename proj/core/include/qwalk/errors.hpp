#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A BipartiteInstance or MarkedSet violates its invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// An operation received an out-of-domain argument (non-positive gamma,
/// mismatched dimensions, empty target set, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical routine failed (eigensolver, quadrature, search).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
