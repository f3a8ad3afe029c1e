#pragma once

#include <stdexcept>
#include <string>

namespace nonclass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Fock space too small for the requested state or moment.
class CutoffTooSmall : public Error {
 public:
  CutoffTooSmall(const std::string& what, double tail_mass = 0.0)
      : Error(what), tail_mass_(tail_mass) {}
  double tail_mass() const { return tail_mass_; }

 private:
  double tail_mass_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidMode : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ImaginaryResidue : public Error {
 public:
  using Error::Error;
};

/// The two routes to the anticommutator matrix disagree.
class DecompositionMismatch : public Error {
 public:
  using Error::Error;
};

class NonUnitaryInput : public Error {
 public:
  using Error::Error;
};

/// Mandel Q requested for a mode with no photons.
class VacuumMode : public Error {
 public:
  using Error::Error;
};

class IdentityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nonclass
