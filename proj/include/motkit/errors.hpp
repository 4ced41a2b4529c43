#pragma once

#include <stdexcept>
#include <string>

namespace motkit {

// Base of every typed error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidWeights : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct NotOnSphere : Error {
  using Error::Error;
};

struct InvalidEpsilon : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct NumericalOverflow : Error {
  using Error::Error;
};

struct NonFiniteGradient : Error {
  using Error::Error;
};

// Data ingestion errors.
struct FormatError : Error {
  using Error::Error;
};

struct TruncatedError : Error {
  using Error::Error;
};

struct ChecksumError : Error {
  using Error::Error;
};

struct VersionError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace motkit
