#include "hecsbox/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hecsbox {

Polynomial::Polynomial(const PrimeField& field) : field_(field) {}

Polynomial::Polynomial(const PrimeField& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const FieldElement& c : coeffs_) {
    if (c.field() != field_) throw FieldMismatch("polynomial coefficient from a different field");
  }
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x(const PrimeField& field) {
  return Polynomial(field, {field.zero(), field.one()});
}

Polynomial Polynomial::from_strings(const PrimeField& field,
                                    const std::vector<std::string>& coeffs) {
  std::vector<FieldElement> out;
  out.reserve(coeffs.size());
  for (const std::string& s : coeffs) out.push_back(field.element_from_string(s));
  return Polynomial(field, std::move(out));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw FieldMismatch("polynomials over different fields");
}

bool Polynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == field_.one();
}

bool Polynomial::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == field_.one();
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) return field_.zero();
  return coeffs_.back();
}

FieldElement Polynomial::eval(const FieldElement& at) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * field_.element(static_cast<long>(i)));
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DivisionByZero("monic() of the zero polynomial");
  if (is_monic()) return *this;
  return *this * leading().inv();
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const FieldElement& c : coeffs_) out.push_back(-c);
  return Polynomial(field_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial::require_same_field(a, b);
  std::vector<FieldElement> out;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial::require_same_field(a, b);
  std::vector<FieldElement> out;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial::require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const FieldElement& s) {
  std::vector<FieldElement> out;
  out.reserve(a.coeffs_.size());
  for (const FieldElement& c : a.coeffs_) out.push_back(c * s);
  return Polynomial(a.field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(a.field_), a};

  const FieldElement lead_inv = b.leading().inv();
  std::vector<FieldElement> rem = a.coeffs_;
  std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                                 a.field_.zero());
  for (int d = a.degree(); d >= b.degree(); --d) {
    FieldElement c = rem[static_cast<std::size_t>(d)] * lead_inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(d - b.degree())] = c;
    for (int i = 0; i <= b.degree(); ++i) {
      std::size_t k = static_cast<std::size_t>(d - b.degree() + i);
      rem[k] = rem[k] - c * b.coeff(i);
    }
  }
  return {Polynomial(a.field_, std::move(quot)), Polynomial(a.field_, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
  return Polynomial::divmod(a, b).first;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return Polynomial::divmod(a, b).second;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  if (r0.is_zero()) return r0;
  return r0.monic();
}

PolynomialXgcd Polynomial::xgcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = constant(a.field_.one()), s1 = Polynomial(a.field_);
  Polynomial t0 = Polynomial(a.field_), t1 = constant(a.field_.one());
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    r0 = r1;
    r1 = r2;
    Polynomial s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Polynomial t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, Polynomial(a.field_), Polynomial(a.field_)};
  FieldElement scale = r0.leading().inv();
  return {r0 * scale, s0 * scale, t0 * scale};
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    FieldElement c = coeff(d);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = c.value() == 1;
    if (d == 0) {
      out << c.value().get_str();
    } else {
      if (!unit) out << c.value().get_str() << "*";
      out << "x";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace hecsbox
