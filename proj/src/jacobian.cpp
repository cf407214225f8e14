#include "hecsbox/jacobian.hpp"

#include <array>
#include <stdexcept>

namespace hecsbox {

MumfordDivisor::MumfordDivisor(const HyperellipticCurve& curve, Polynomial u, Polynomial v)
    : curve_(curve), u_(std::move(u)), v_(std::move(v)) {
  if (u_.field() != curve_.field() || v_.field() != curve_.field()) {
    throw FieldMismatch("divisor polynomials over a different field");
  }
  if (u_.is_zero()) throw InvalidDivisor("u must be nonzero");
}

MumfordDivisor MumfordDivisor::identity(const HyperellipticCurve& curve) {
  const PrimeField& field = curve.field();
  return MumfordDivisor(curve, Polynomial::constant(field.one()), Polynomial(field));
}

MumfordDivisor MumfordDivisor::from_point(const CurvePoint& p) {
  const PrimeField& field = p.curve().field();
  Polynomial u(field, {-p.x(), field.one()});
  Polynomial v = Polynomial::constant(p.y());
  return MumfordDivisor(p.curve(), std::move(u), std::move(v));
}

MumfordDivisor divisor_from_point(const CurvePoint& p) { return MumfordDivisor::from_point(p); }

namespace {

/// v^2 + h*v - f, the polynomial u must divide.
Polynomial mumford_witness(const MumfordDivisor& d) {
  const HyperellipticCurve& c = d.curve();
  return d.v() * d.v() + c.h() * d.v() - c.f();
}

}  // namespace

bool is_valid(const MumfordDivisor& d) {
  if (d.is_identity()) return true;
  if (!d.u().is_monic()) return false;
  if (d.u().degree() == 0) return false;  // nonunit constants are never monic, but be explicit
  if (d.v().degree() >= d.u().degree()) return false;
  return (mumford_witness(d) % d.u()).is_zero();
}

bool is_reduced(const MumfordDivisor& d) {
  return d.u().degree() <= d.curve().genus() && is_valid(d);
}

MumfordDivisor divisor_from_points(const DivisorInput& input) {
  if (input.empty()) throw Error("divisor_from_points: empty input");
  const HyperellipticCurve& curve = input.front().first.curve();
  MumfordDivisor acc = MumfordDivisor::identity(curve);
  for (const auto& [point, multiplicity] : input) {
    if (point.curve() != curve) {
      throw FieldMismatch("divisor input points on different curves");
    }
    if (multiplicity == 0) throw InvalidDivisor("multiplicities must be >= 1");
    acc = add(acc, scalar_mul(mpz_class(multiplicity), MumfordDivisor::from_point(point)));
  }
  return acc;
}

MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) {
  if (a.curve() != b.curve()) throw FieldMismatch("divisors on different curves");
  if (!is_valid(a) || !is_valid(b)) throw InvalidDivisor("add requires valid divisors");

  const HyperellipticCurve& curve = a.curve();
  const Polynomial& h = curve.h();
  const Polynomial& f = curve.f();
  const int genus = curve.genus();

  // Cantor composition.
  const auto [d1, e1, e2] = Polynomial::xgcd(a.u(), b.u());
  const Polynomial cross = a.v() + b.v() + h;
  const auto [d, c1, c2] = Polynomial::xgcd(d1, cross);
  const Polynomial s1 = c1 * e1;
  const Polynomial s2 = c1 * e2;
  const Polynomial& s3 = c2;

  const auto [u_comp, u_rem] = Polynomial::divmod(a.u() * b.u(), d * d);
  if (!u_rem.is_zero()) throw std::logic_error("cantor: u1*u2 not divisible by d^2");

  const Polynomial v_num = s1 * a.u() * b.v() + s2 * b.u() * a.v() + s3 * (a.v() * b.v() + f);
  const auto [v_quot, v_rem] = Polynomial::divmod(v_num, d);
  if (!v_rem.is_zero()) throw std::logic_error("cantor: v numerator not divisible by d");

  Polynomial u = u_comp;
  Polynomial v = v_quot % u;

  // Reduction to deg u <= genus.
  while (u.degree() > genus) {
    const Polynomial numer = f - v * h - v * v;
    const auto [u_next, r] = Polynomial::divmod(numer, u);
    if (!r.is_zero()) throw std::logic_error("cantor: reduction step not exact");
    u = u_next;
    v = (-h - v) % u;
  }
  u = u.monic();
  if (u.is_one()) v = Polynomial(curve.field());
  return MumfordDivisor(curve, std::move(u), std::move(v));
}

MumfordDivisor neg(const MumfordDivisor& d) {
  const Polynomial v = (-d.v() - d.curve().h()) % d.u();
  return MumfordDivisor(d.curve(), d.u(), v);
}

MumfordDivisor scalar_mul(const mpz_class& k, const MumfordDivisor& d) {
  if (k < 0) throw Error("scalar_mul: negative scalar");
  MumfordDivisor acc = MumfordDivisor::identity(d.curve());
  if (k == 0) return acc;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = add(acc, acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(acc, d);
  }
  return acc;
}

std::vector<MumfordDivisor> enumerate_reduced_divisors(const HyperellipticCurve& curve) {
  if (curve.genus() != 2) {
    throw std::invalid_argument("divisor enumeration is implemented for genus 2");
  }
  const PrimeField& field = curve.field();
  if (field.modulus() >= kDivisorEnumerationBound) {
    throw FieldTooLarge("divisor enumeration requires p < " +
                        std::to_string(kDivisorEnumerationBound));
  }
  const long p = static_cast<long>(field.modulus().get_ui());

  std::vector<MumfordDivisor> out;
  out.push_back(MumfordDivisor::identity(curve));

  // deg u = 1: u = x + a, v constant.
  for (long a = 0; a < p; ++a) {
    const Polynomial u(field, {field.element(a), field.one()});
    for (long v0 = 0; v0 < p; ++v0) {
      MumfordDivisor d(curve, u, Polynomial(field, {field.element(v0)}));
      if (is_valid(d)) out.push_back(std::move(d));
    }
  }

  // deg u = 2: u = x^2 + a*x + b, v = c*x + d.
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < p; ++b) {
      const Polynomial u(field, {field.element(b), field.element(a), field.one()});
      for (long c = 0; c < p; ++c) {
        for (long dd = 0; dd < p; ++dd) {
          MumfordDivisor d(curve, u, Polynomial(field, {field.element(dd), field.element(c)}));
          if (is_valid(d)) out.push_back(std::move(d));
        }
      }
    }
  }
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return acc;
}

/// Reduces a polynomial (coefficients ascending, degree <= 5) modulo
/// x^2 + a*x + b; returns {const coeff, x coeff}.
std::array<std::uint64_t, 2> reduce_mod_quadratic(std::array<std::uint64_t, 6> c, std::uint64_t a,
                                                  std::uint64_t b, std::uint64_t p) {
  for (int d = 5; d >= 2; --d) {
    const std::uint64_t lead = c[static_cast<std::size_t>(d)];
    if (lead == 0) continue;
    c[static_cast<std::size_t>(d)] = 0;
    c[static_cast<std::size_t>(d - 1)] = submod(c[static_cast<std::size_t>(d - 1)],
                                                mulmod(lead, a, p), p);
    c[static_cast<std::size_t>(d - 2)] = submod(c[static_cast<std::size_t>(d - 2)],
                                                mulmod(lead, b, p), p);
  }
  return {c[0], c[1]};
}

}  // namespace

std::uint64_t jacobian_order_by_enumeration(const HyperellipticCurve& curve) {
  if (curve.genus() != 2) {
    throw std::invalid_argument("jacobian order enumeration is implemented for genus 2");
  }
  const PrimeField& field = curve.field();
  if (field.modulus() >= kJacobianOrderBound) {
    throw FieldTooLarge("jacobian order enumeration requires p < " +
                        std::to_string(kJacobianOrderBound));
  }
  const std::uint64_t p = field.modulus().get_ui();

  std::array<std::uint64_t, 6> fc{};
  for (int i = 0; i <= 5; ++i) fc[static_cast<std::size_t>(i)] = curve.f().coeff(i).value().get_ui();
  std::array<std::uint64_t, 6> hc{};
  for (int i = 0; i <= curve.h().degree(); ++i) {
    hc[static_cast<std::size_t>(i)] = curve.h().coeff(i).value().get_ui();
  }

  // root_count[t] = #{y in F_p : y^2 = t}.
  std::vector<std::uint8_t> root_count(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++root_count[mulmod(y, y, p)];
  // Inverses for the linear solves below.
  std::vector<std::uint64_t> inverse(p, 0);
  for (std::uint64_t v = 1; v < p; ++v) inverse[v] = powmod(v, p - 2, p);
  const std::uint64_t half = inverse[2];

  const auto eval6 = [&](const std::array<std::uint64_t, 6>& c, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (int i = 5; i >= 0; --i) acc = (mulmod(acc, x, p) + c[static_cast<std::size_t>(i)]) % p;
    return acc;
  };

  std::uint64_t order = 1;  // identity

  // Weight 1: one divisor per affine point. Solutions of y^2 + h(x0)*y = f(x0)
  // counted via the completed square (y + h/2)^2 = f + (h/2)^2.
  for (std::uint64_t x0 = 0; x0 < p; ++x0) {
    const std::uint64_t hv = eval6(hc, x0);
    const std::uint64_t c = mulmod(hv, half, p);
    const std::uint64_t t = (eval6(fc, x0) + mulmod(c, c, p)) % p;
    order += root_count[t];
  }

  // Weight 2: for u = x^2 + a*x + b, count v = c*x + d with u | v^2 + h*v - f.
  // With hbar = H1*x + H0 and fbar = F1*x + F0 the reductions of h and f, the
  // divisibility condition splits into
  //   x:     2cd - a*c^2 + H1*d + H0*c - a*H1*c - F1 = 0
  //   const: d^2 - b*c^2 + H0*d - b*H1*c - F0 = 0,
  // linear in d for fixed c unless 2c + H1 = 0.
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      const auto [F0, F1] = [&] {
        const auto r = reduce_mod_quadratic(fc, a, b, p);
        return std::pair<std::uint64_t, std::uint64_t>(r[0], r[1]);
      }();
      const auto [H0, H1] = [&] {
        const auto r = reduce_mod_quadratic(hc, a, b, p);
        return std::pair<std::uint64_t, std::uint64_t>(r[0], r[1]);
      }();

      for (std::uint64_t c = 0; c < p; ++c) {
        const std::uint64_t c2 = mulmod(c, c, p);
        const std::uint64_t lin = (2 * c + H1) % p;
        // rhs of the x-coefficient equation, solved for d.
        std::uint64_t rhs = (F1 + mulmod(a, c2, p)) % p;
        rhs = submod(rhs, mulmod(H0, c, p), p);
        rhs = (rhs + mulmod(a, mulmod(H1, c, p), p)) % p;
        if (lin != 0) {
          const std::uint64_t d = mulmod(rhs, inverse[lin], p);
          std::uint64_t w = (mulmod(d, d, p) + mulmod(H0, d, p)) % p;
          w = submod(w, mulmod(b, c2, p), p);
          w = submod(w, mulmod(b, mulmod(H1, c, p), p), p);
          w = submod(w, F0, p);
          if (w == 0) ++order;
        } else if (rhs == 0) {
          // d free in the linear equation; the constant equation becomes
          // d^2 + H0*d - (b*c^2 + b*H1*c + F0) = 0.
          std::uint64_t k = (mulmod(b, c2, p) + mulmod(b, mulmod(H1, c, p), p) + F0) % p;
          const std::uint64_t hh = mulmod(H0, half, p);
          const std::uint64_t t = (k + mulmod(hh, hh, p)) % p;  // (d + H0/2)^2 = t
          order += root_count[t];
        }
      }
    }
  }
  return order;
}

}  // namespace hecsbox
