#pragma once

#include <stdexcept>
#include <string>

namespace locmaass {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain where the operation is defined.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Gamma-type pole hit (non-positive integer argument).
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Result would overflow double precision.
class OverflowError : public DomainError {
public:
  using DomainError::DomainError;
};

/// An enumeration or summation exceeded its configured size limit.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A series or shell sequence failed to converge.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

} // namespace locmaass
