#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecsbox/field.hpp"

namespace hecsbox {

struct PolynomialXgcd;

/// Dense univariate polynomial over a prime field. Coefficients are stored
/// ascending by degree with no trailing zeros; the zero polynomial stores
/// nothing and reports degree -1.
class Polynomial {
 public:
  /// The zero polynomial.
  explicit Polynomial(const PrimeField& field);
  Polynomial(const PrimeField& field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(const PrimeField& field);
  /// Coefficients given ascending as decimal/hex strings.
  static Polynomial from_strings(const PrimeField& field, const std::vector<std::string>& coeffs);

  const PrimeField& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  bool is_one() const;

  /// Coefficient of x^i; zero beyond the stored degree.
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }

  FieldElement eval(const FieldElement& at) const;
  Polynomial derivative() const;
  /// Scales to leading coefficient 1. Throws DivisionByZero on the zero polynomial.
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElement& s);

  /// Euclidean division: a = q*b + r with deg r < deg b. Throws DivisionByZero
  /// when b is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);

  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  static PolynomialXgcd xgcd(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form, e.g. "x^5 + 2*x^2 + x + 3".
  std::string to_string() const;

 private:
  void trim();
  static void require_same_field(const Polynomial& a, const Polynomial& b);

  PrimeField field_;
  std::vector<FieldElement> coeffs_;
};

struct PolynomialXgcd {
  Polynomial g, s, t;  // s*a + t*b = g, g monic (or zero)
};

}  // namespace hecsbox
