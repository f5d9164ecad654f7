#pragma once

#include <stdexcept>
#include <string>

namespace hypaskey {

/// Base class for every precondition or numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies on a branch cut that the function refuses to resolve.
class CutError : public Error {
 public:
  using Error::Error;
};

/// Argument is a pole of a rational closed form.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the horizontal strip where an integral representation converges.
class StripError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the regime where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Real parameters violate the regime e^{2 pi mu} > sinh^2(2 pi sigma).
class RegimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A quadrature could not meet its requested tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

/// No normalization keeps a contour integral representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypaskey
