#pragma once

#include <stdexcept>
#include <string>

namespace hecsbox {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed integer / hex / config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Modulus rejected at field construction (composite, or p <= 2).
class InvalidModulus : public Error {
 public:
  using Error::Error;
};

/// Binary operation on elements of different prime fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Inversion of zero, or division by a zero polynomial.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// sqrt() requested for a quadratic non-residue.
class NotASquare : public Error {
 public:
  using Error::Error;
};

/// Curve rejected at construction (degree/monicity constraints, singularity).
class InvalidCurve : public Error {
 public:
  using Error::Error;
};

/// Exhaustive operation requested over a field above its size guard.
class FieldTooLarge : public Error {
 public:
  using Error::Error;
};

/// Point search scanned the whole field without finding a point.
class PointSearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Divisor violates the Mumford condition where a valid one is required.
class InvalidDivisor : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the identity divisor.
class IdentityDivisor : public Error {
 public:
  using Error::Error;
};

/// Key/point combination collapsed to the identity; no S-box can be read out.
class DegenerateResult : public Error {
 public:
  using Error::Error;
};

/// 16-entry table is not a permutation of {0,...,15}.
class NotAPermutation : public Error {
 public:
  using Error::Error;
};

/// Component function requested for output mask 0.
class ZeroMask : public Error {
 public:
  using Error::Error;
};

}  // namespace hecsbox
