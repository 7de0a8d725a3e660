#pragma once

#include <stdexcept>
#include <string>

namespace krc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain (bad rank, non-dominant weight, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration cap (|W0|, node count) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// No unique weight-extremal element to anchor an isomorphism search.
class AmbiguousAnchor : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an experiment does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Crystal construction requested that this library does not provide.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace krc
