#include "hecsbox/field.hpp"

#include <utility>

namespace hecsbox {

namespace {

bool is_hex_prefixed(const std::string& s, std::size_t start) {
  return s.size() >= start + 2 && s[start] == '0' && (s[start + 1] == 'x' || s[start + 1] == 'X');
}

}  // namespace

mpz_class parse_integer(const std::string& text) {
  std::string body = text;
  bool negative = false;
  std::size_t start = 0;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    start = 1;
  }
  int base = 10;
  if (is_hex_prefixed(body, start)) {
    base = 16;
    body = body.substr(start + 2);
  } else {
    body = body.substr(start);
  }
  if (body.empty()) throw ParseError("not an integer: \"" + text + "\"");
  for (char c : body) {
    const bool dec = c >= '0' && c <= '9';
    const bool hex = (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    if (!(dec || (base == 16 && hex))) throw ParseError("not an integer: \"" + text + "\"");
  }
  mpz_class out;
  if (mpz_set_str(out.get_mpz_t(), body.c_str(), base) != 0) {
    throw ParseError("not an integer: \"" + text + "\"");
  }
  if (negative) out = -out;
  return out;
}

PrimeField::PrimeField(const mpz_class& modulus) {
  if (modulus <= 2) {
    throw InvalidModulus("modulus must be an odd prime > 2, got " + modulus.get_str());
  }
  if (mpz_probab_prime_p(modulus.get_mpz_t(), kPrimalityRounds) == 0) {
    throw InvalidModulus("modulus " + modulus.get_str() + " is not prime");
  }
  p_ = std::make_shared<const mpz_class>(modulus);
}

PrimeField PrimeField::from_string(const std::string& text) {
  return PrimeField(parse_integer(text));
}

FieldElement PrimeField::element(const mpz_class& value) const {
  mpz_class v;
  mpz_mod(v.get_mpz_t(), value.get_mpz_t(), p_->get_mpz_t());
  return FieldElement(p_, std::move(v));
}

FieldElement PrimeField::element_from_string(const std::string& text) const {
  return element(parse_integer(text));
}

FieldElement PrimeField::zero() const { return FieldElement(p_, 0); }

FieldElement PrimeField::one() const { return FieldElement(p_, 1); }

PrimeField FieldElement::field() const { return PrimeField(p_); }

void FieldElement::require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.p_ != b.p_ && *a.p_ != *b.p_) {
    throw FieldMismatch("operands from different fields: p = " + a.p_->get_str() +
                        " vs p = " + b.p_->get_str());
  }
}

FieldElement FieldElement::operator-() const {
  if (v_ == 0) return *this;
  return FieldElement(p_, *p_ - v_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  mpz_class v = a.v_ + b.v_;
  if (v >= *a.p_) v -= *a.p_;
  return FieldElement(a.p_, std::move(v));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  mpz_class v = a.v_ - b.v_;
  if (v < 0) v += *a.p_;
  return FieldElement(a.p_, std::move(v));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  mpz_class v = a.v_ * b.v_;
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), a.p_->get_mpz_t());
  return FieldElement(a.p_, std::move(v));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inv();
}

FieldElement FieldElement::inv() const {
  if (v_ == 0) throw DivisionByZero("inverse of 0 in F_" + p_->get_str());
  mpz_class out;
  // Extended Euclid; always succeeds for 0 < v < p prime.
  if (mpz_invert(out.get_mpz_t(), v_.get_mpz_t(), p_->get_mpz_t()) == 0) {
    throw DivisionByZero("no inverse for " + v_.get_str() + " mod " + p_->get_str());
  }
  return FieldElement(p_, std::move(out));
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  if (exponent < 0) throw Error("pow: negative exponent");
  mpz_class out;
  mpz_powm(out.get_mpz_t(), v_.get_mpz_t(), exponent.get_mpz_t(), p_->get_mpz_t());
  return FieldElement(p_, std::move(out));
}

bool FieldElement::is_square() const {
  if (v_ == 0) return true;
  mpz_class e = (*p_ - 1) / 2;
  return pow(e).v_ == 1;
}

FieldElement FieldElement::sqrt() const {
  const mpz_class& p = *p_;
  if (v_ == 0) return *this;
  if (!is_square()) {
    throw NotASquare(v_.get_str() + " is not a square mod " + p.get_str());
  }

  mpz_class root;
  if (p % 4 == 3) {
    mpz_class e = (p + 1) / 4;
    root = pow(e).v_;
  } else {
    // Tonelli-Shanks. Write p - 1 = q * 2^s with q odd.
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
      q /= 2;
      ++s;
    }
    // Smallest non-residue, found deterministically.
    FieldElement z = FieldElement(p_, 2);
    mpz_class euler_exp = (p - 1) / 2;
    while (z.pow(euler_exp).v_ == 1) {
      z = FieldElement(p_, z.v_ + 1);
    }
    unsigned long m = s;
    FieldElement c = z.pow(q);
    FieldElement t = pow(q);
    FieldElement r = pow((q + 1) / 2);
    while (t.v_ != 1) {
      unsigned long i = 0;
      FieldElement probe = t;
      while (probe.v_ != 1) {
        probe = probe * probe;
        ++i;
      }
      FieldElement b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
      m = i;
      c = b * b;
      t = t * c;
      r = r * b;
    }
    root = r.v_;
  }

  mpz_class other = p - root;
  return FieldElement(p_, root <= other ? root : other);
}

}  // namespace hecsbox
