#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecsbox/curve.hpp"

namespace hecsbox {

/// Largest p for which enumerate_reduced_divisors will run (O(p^4) scan).
inline constexpr long kDivisorEnumerationBound = 41;
/// Largest p for which jacobian_order_by_enumeration will run.
inline constexpr long kJacobianOrderBound = 500;

/// Reduced divisor class in Mumford form (u, v): u monic, deg v < deg u
/// (identity is u = 1, v = 0) and u | v^2 + h*v - f. Construction normalizes
/// trailing zeros but does not enforce the Mumford condition; see is_valid.
class MumfordDivisor {
 public:
  MumfordDivisor(const HyperellipticCurve& curve, Polynomial u, Polynomial v);

  static MumfordDivisor identity(const HyperellipticCurve& curve);
  static MumfordDivisor from_point(const CurvePoint& p);

  const HyperellipticCurve& curve() const { return curve_; }
  const Polynomial& u() const { return u_; }
  const Polynomial& v() const { return v_; }
  bool is_identity() const { return u_.is_one() && v_.is_zero(); }

  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
    return a.curve_ == b.curve_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }

 private:
  HyperellipticCurve curve_;
  Polynomial u_;
  Polynomial v_;
};

/// Points with positive multiplicities, all on one curve.
using DivisorInput = std::vector<std::pair<CurvePoint, unsigned long>>;

/// Mumford condition: u nonzero monic, deg v < deg u (or identity), and
/// u | v^2 + h*v - f.
bool is_valid(const MumfordDivisor& d);

/// is_valid plus deg u <= genus.
bool is_reduced(const MumfordDivisor& d);

MumfordDivisor divisor_from_point(const CurvePoint& p);

/// Sum of multiplicity-weighted point divisors. Throws FieldMismatch when the
/// points live on different curves and Error on empty input.
MumfordDivisor divisor_from_points(const DivisorInput& input);

/// Cantor composition followed by reduction to deg u <= genus. Inputs must be
/// valid (InvalidDivisor otherwise); the result is reduced and valid.
MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b);

/// (u, (-v - h) mod u).
MumfordDivisor neg(const MumfordDivisor& d);

/// Double-and-add; k = 0 gives the identity.
MumfordDivisor scalar_mul(const mpz_class& k, const MumfordDivisor& d);

/// Every reduced divisor of a genus-2 curve, identity included, ordered by
/// (deg u, u coefficients, v coefficients). Direct scan over all (u, v) pairs;
/// requires p < kDivisorEnumerationBound.
std::vector<MumfordDivisor> enumerate_reduced_divisors(const HyperellipticCurve& curve);

/// |Jac(F_p)| for a genus-2 curve with p < kJacobianOrderBound, computed by
/// exhaustive enumeration of Mumford pairs (per-u solution counting).
std::uint64_t jacobian_order_by_enumeration(const HyperellipticCurve& curve);

}  // namespace hecsbox
