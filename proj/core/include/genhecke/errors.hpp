#pragma once

#include <stdexcept>
#include <string>

namespace genhecke {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Root datum input that fails validation (shape, pairing, Cartan, closure).
class InvalidDatum : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its precondition (non-dominant input, mismatched
/// cone functions, filtration violations, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A runtime certificate failed. This never happens on valid input: it marks
/// an implementation defect, not a user error.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace genhecke
