#include "hecsbox/curve.hpp"

#include <utility>

namespace hecsbox {

struct HyperellipticCurve::Data {
  PrimeField field;
  Polynomial h;
  Polynomial f;
  int genus;
  bool nonsingularity_verified;
};

namespace {

/// Singular affine points must satisfy 2y + h(x) = 0, so y is determined per
/// x and the scan is O(p).
void check_nonsingular(const PrimeField& field, const Polynomial& h, const Polynomial& f) {
  const FieldElement half = field.element(2).inv();
  const Polynomial hd = h.derivative();
  const Polynomial fd = f.derivative();
  mpz_class xv = 0;
  for (; xv < field.modulus(); ++xv) {
    const FieldElement x = field.element(xv);
    const FieldElement y = -(h.eval(x) * half);
    const FieldElement on_curve = y * y + h.eval(x) * y - f.eval(x);
    if (!on_curve.is_zero()) continue;
    const FieldElement dx = hd.eval(x) * y - fd.eval(x);
    if (dx.is_zero()) {
      throw InvalidCurve("curve is singular at x = " + x.value().get_str());
    }
  }
}

/// Solutions y of y^2 + h(x)*y = f(x) for a fixed x, ascending.
std::vector<FieldElement> solve_for_y(const HyperellipticCurve& curve, const FieldElement& x) {
  const PrimeField& field = curve.field();
  const FieldElement half = field.element(2).inv();
  const FieldElement c = curve.h().eval(x) * half;
  const FieldElement rhs = curve.f().eval(x) + c * c;  // (y + h/2)^2 = f + (h/2)^2
  std::vector<FieldElement> ys;
  if (rhs.is_zero()) {
    ys.push_back(-c);
  } else if (rhs.is_square()) {
    const FieldElement z = rhs.sqrt();
    FieldElement y1 = z - c;
    FieldElement y2 = -z - c;
    if (y2 < y1) std::swap(y1, y2);
    ys.push_back(y1);
    ys.push_back(y2);
  }
  return ys;
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(const PrimeField& field, Polynomial h, Polynomial f,
                                       int genus) {
  if (genus < 1) throw InvalidCurve("genus must be >= 1");
  if (h.field() != field || f.field() != field) {
    throw FieldMismatch("curve polynomials over a different field");
  }
  if (f.degree() != 2 * genus + 1) {
    throw InvalidCurve("deg f = " + std::to_string(f.degree()) + ", expected 2*genus + 1 = " +
                       std::to_string(2 * genus + 1));
  }
  if (!f.is_monic()) throw InvalidCurve("f must be monic");
  if (h.degree() > genus) {
    throw InvalidCurve("deg h = " + std::to_string(h.degree()) + " exceeds genus");
  }

  bool verified = false;
  if (field.modulus() < kSingularityCheckBound) {
    check_nonsingular(field, h, f);
    verified = true;
  }
  d_ = std::make_shared<const Data>(Data{field, std::move(h), std::move(f), genus, verified});
}

const PrimeField& HyperellipticCurve::field() const { return d_->field; }
const Polynomial& HyperellipticCurve::h() const { return d_->h; }
const Polynomial& HyperellipticCurve::f() const { return d_->f; }
int HyperellipticCurve::genus() const { return d_->genus; }
bool HyperellipticCurve::nonsingularity_verified() const { return d_->nonsingularity_verified; }

bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) {
  if (a.d_ == b.d_) return true;
  return a.field() == b.field() && a.genus() == b.genus() && a.h() == b.h() && a.f() == b.f();
}

CurvePoint::CurvePoint(const HyperellipticCurve& curve, FieldElement x, FieldElement y)
    : curve_(curve), x_(std::move(x)), y_(std::move(y)) {
  if (!is_on_curve(curve_, x_, y_)) {
    throw InvalidCurve("(" + x_.value().get_str() + ", " + y_.value().get_str() +
                       ") is not on the curve");
  }
}

bool is_on_curve(const HyperellipticCurve& curve, const FieldElement& x, const FieldElement& y) {
  if (x.field() != curve.field() || y.field() != curve.field()) {
    throw FieldMismatch("point coordinates from a different field");
  }
  return (y * y + curve.h().eval(x) * y - curve.f().eval(x)).is_zero();
}

CurvePoint negate_point(const CurvePoint& p) {
  const FieldElement y = -p.y() - p.curve().h().eval(p.x());
  return CurvePoint(p.curve(), p.x(), y);
}

std::vector<CurvePoint> enumerate_points(const HyperellipticCurve& curve) {
  const PrimeField& field = curve.field();
  if (field.modulus() >= kEnumerationBound) {
    throw FieldTooLarge("point enumeration requires p < " + std::to_string(kEnumerationBound));
  }
  std::vector<CurvePoint> points;
  mpz_class xv = 0;
  for (; xv < field.modulus(); ++xv) {
    const FieldElement x = field.element(xv);
    for (const FieldElement& y : solve_for_y(curve, x)) {
      points.emplace_back(curve, x, y);
    }
  }
  return points;
}

std::uint64_t count_points(const HyperellipticCurve& curve) {
  const PrimeField& field = curve.field();
  if (field.modulus() >= kEnumerationBound) {
    throw FieldTooLarge("point counting requires p < " + std::to_string(kEnumerationBound));
  }
  std::uint64_t n = 0;
  mpz_class xv = 0;
  for (; xv < field.modulus(); ++xv) {
    n += solve_for_y(curve, field.element(xv)).size();
  }
  return n;
}

CurvePoint find_point(const HyperellipticCurve& curve, const mpz_class& start_x) {
  const PrimeField& field = curve.field();
  mpz_class xv;
  mpz_mod(xv.get_mpz_t(), start_x.get_mpz_t(), field.modulus().get_mpz_t());
  mpz_class scanned = 0;
  for (; scanned < field.modulus(); ++scanned) {
    const FieldElement x = field.element(xv);
    const std::vector<FieldElement> ys = solve_for_y(curve, x);
    if (!ys.empty()) return CurvePoint(curve, x, ys.front());
    ++xv;
    if (xv == field.modulus()) xv = 0;
  }
  throw PointSearchExhausted("no affine point found over the whole field");
}

}  // namespace hecsbox
