#pragma once

#include <stdexcept>
#include <string>

namespace clusterforge {

// Base type for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested register exceeds the configured qubit budget.
struct SizeError : Error {
  using Error::Error;
};

// Input that violates a structural precondition: malformed cluster,
// non-unitary matrix, index out of range, refused coupling spec.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace clusterforge
