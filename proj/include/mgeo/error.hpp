#pragma once

#include <stdexcept>
#include <string>

namespace mgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Non-finite coordinates, zero vectors where a nonzero one is required,
/// out-of-range parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A gauge boundary that does not close up or is not star-shaped.
class MalformedBoundary : public Error {
 public:
  using Error::Error;
};

/// A description that parses but does not define a norm.
class InvalidSpace : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace mgeo
