#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "hecsbox/errors.hpp"

namespace hecsbox {

class FieldElement;

/// Number of Miller-Rabin rounds applied to a candidate modulus.
inline constexpr int kPrimalityRounds = 40;

/// A prime field F_p with odd p > 2. Immutable; cheap to copy.
class PrimeField {
 public:
  /// Throws InvalidModulus unless p > 2 and p passes the primality test.
  explicit PrimeField(const mpz_class& modulus);

  /// Parses a decimal or 0x-prefixed hexadecimal modulus.
  static PrimeField from_string(const std::string& text);

  const mpz_class& modulus() const { return *p_; }

  /// Canonical element with the given value reduced into [0, p).
  FieldElement element(const mpz_class& value) const;
  FieldElement element_from_string(const std::string& text) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_ || *a.p_ == *b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

 private:
  explicit PrimeField(std::shared_ptr<const mpz_class> p) : p_(std::move(p)) {}

  std::shared_ptr<const mpz_class> p_;
  friend class FieldElement;
};

/// An element of a PrimeField, always stored as its canonical
/// representative in [0, p). Immutable value type.
class FieldElement {
 public:
  const mpz_class& value() const { return v_; }
  const mpz_class& modulus() const { return *p_; }
  PrimeField field() const;
  bool is_zero() const { return v_ == 0; }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  /// Multiplicative inverse. Throws DivisionByZero on 0.
  FieldElement inv() const;

  /// a^e for e >= 0, with 0^0 = 1.
  FieldElement pow(const mpz_class& exponent) const;

  /// Euler criterion; 0 counts as a square.
  bool is_square() const;

  /// Canonical square root (the numerically smaller of the two roots).
  /// Throws NotASquare for non-residues.
  FieldElement sqrt() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.p_ == *b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Total order on canonical representatives (same field assumed).
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.v_ < b.v_; }

 private:
  FieldElement(std::shared_ptr<const mpz_class> p, mpz_class v)
      : p_(std::move(p)), v_(std::move(v)) {}

  /// Throws FieldMismatch unless both operands share one modulus.
  static void require_same_field(const FieldElement& a, const FieldElement& b);

  std::shared_ptr<const mpz_class> p_;
  mpz_class v_;
  friend class PrimeField;
};

/// Parses a decimal or 0x-prefixed hexadecimal integer (optional leading '-').
mpz_class parse_integer(const std::string& text);

inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement pow(const FieldElement& a, const mpz_class& e) { return a.pow(e); }
inline bool is_square(const FieldElement& a) { return a.is_square(); }
inline FieldElement sqrt(const FieldElement& a) { return a.sqrt(); }

}  // namespace hecsbox
