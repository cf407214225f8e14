#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecsbox/polynomial.hpp"

namespace hecsbox {

/// Largest p for which curve construction verifies non-singularity exhaustively.
inline constexpr long kSingularityCheckBound = 10000;
/// Largest p accepted by point enumeration / counting.
inline constexpr long kEnumerationBound = 1000000;

/// Imaginary-model hyperelliptic curve y^2 + h(x)*y = f(x) over an odd prime
/// field, with f monic of degree 2g+1 and deg h <= g. Immutable; cheap to copy.
class HyperellipticCurve {
 public:
  /// Validates the degree/monicity constraints. For p < kSingularityCheckBound
  /// also rejects singular curves by exhaustive search; above the bound the
  /// check is skipped and nonsingularity_verified() reports false.
  HyperellipticCurve(const PrimeField& field, Polynomial h, Polynomial f, int genus);

  const PrimeField& field() const;
  const Polynomial& h() const;
  const Polynomial& f() const;
  int genus() const;
  bool nonsingularity_verified() const;

  friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b);
  friend bool operator!=(const HyperellipticCurve& a, const HyperellipticCurve& b) {
    return !(a == b);
  }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Affine point on a hyperelliptic curve; satisfies the curve equation exactly.
class CurvePoint {
 public:
  CurvePoint(const HyperellipticCurve& curve, FieldElement x, FieldElement y);

  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  const HyperellipticCurve& curve() const { return curve_; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return a.curve_ == b.curve_ && a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

 private:
  HyperellipticCurve curve_;
  FieldElement x_;
  FieldElement y_;
};

/// True iff y^2 + h(x)*y - f(x) = 0.
bool is_on_curve(const HyperellipticCurve& curve, const FieldElement& x, const FieldElement& y);

/// Hyperelliptic involution: (x, -y - h(x)).
CurvePoint negate_point(const CurvePoint& p);

/// All affine points, ordered by (x, y) ascending. Requires p < kEnumerationBound.
std::vector<CurvePoint> enumerate_points(const HyperellipticCurve& curve);

/// Number of affine points; same guard as enumerate_points.
std::uint64_t count_points(const HyperellipticCurve& curve);

/// Deterministic point selection: scans x = start_x, start_x + 1, ... (mod p)
/// for the first x whose completed-square right-hand side f(x) + (h(x)/2)^2 is
/// a square, and returns the point with the smaller y. Throws
/// PointSearchExhausted after a full field scan.
CurvePoint find_point(const HyperellipticCurve& curve, const mpz_class& start_x);

}  // namespace hecsbox
