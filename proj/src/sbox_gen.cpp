#include "hecsbox/sbox_gen.hpp"

#include <stdexcept>

namespace hecsbox {

std::string to_string(FoldRule rule) {
  switch (rule) {
    case FoldRule::kWeight1:
      return "weight1";
    case FoldRule::kWeight2Coeff:
      return "weight2-coeff";
  }
  throw std::logic_error("unknown fold rule");
}

FoldedPoint fold_divisor(const MumfordDivisor& d) {
  if (d.is_identity()) {
    throw IdentityDivisor("fold_divisor: identity divisor has no coordinate readout");
  }
  const Polynomial& u = d.u();
  const Polynomial& v = d.v();
  if (u.degree() == 1) {
    return FoldedPoint{-u.coeff(0), v.coeff(0), FoldRule::kWeight1};
  }
  return FoldedPoint{u.coeff(0), v.coeff(0), FoldRule::kWeight2Coeff};
}

mpz_class xor_fold(const FieldElement& x_p, const FieldElement& y_p) {
  mpz_class q;
  mpz_xor(q.get_mpz_t(), x_p.value().get_mpz_t(), y_p.value().get_mpz_t());
  return q;
}

std::vector<std::uint8_t> nibble_stream(const mpz_class& q) {
  if (q < 0) throw Error("nibble_stream: negative input");
  const std::string hex = q.get_str(16);
  std::vector<std::uint8_t> out;
  out.reserve(hex.size());
  for (char c : hex) {
    const std::uint8_t v =
        c <= '9' ? static_cast<std::uint8_t>(c - '0') : static_cast<std::uint8_t>(c - 'a' + 10);
    out.push_back(v);
  }
  return out;
}

ExtractResult extract_unique(const std::vector<std::uint8_t>& nibbles) {
  std::array<bool, 16> seen{};
  SBox4 sbox;
  std::size_t filled = 0;
  for (std::uint8_t nib : nibbles) {
    if (filled == 16) break;
    if (!seen[nib]) {
      seen[nib] = true;
      sbox.table[filled++] = nib;
    }
  }
  const bool completion_used = filled < 16;
  for (std::uint8_t v = 0; v < 16 && filled < 16; ++v) {
    if (!seen[v]) sbox.table[filled++] = v;
  }
  return ExtractResult{sbox, completion_used};
}

GenResult generate_sbox(const GenParams& params) {
  if (params.family_size < 1 || params.family_size > 16) {
    throw std::invalid_argument("family size must be in [1, 16]");
  }
  const MumfordDivisor d_m = divisor_from_points(params.points);
  const MumfordDivisor d_n = scalar_mul(params.key, d_m);
  const MumfordDivisor sum = add(d_m, d_n);

  // Cross-check the group arithmetic through the second route.
  if (sum != scalar_mul(params.key + 1, d_m)) {
    throw std::logic_error("divisor arithmetic mismatch: D_m + key*D_m != (key+1)*D_m");
  }
  if (sum.is_identity()) {
    throw DegenerateResult("(key + 1) * D_m is the identity; pick a different key or points");
  }

  const FoldedPoint folded = fold_divisor(sum);
  const mpz_class q = xor_fold(folded.x_p, folded.y_p);
  const ExtractResult extracted = extract_unique(nibble_stream(q));
  return GenResult{extracted.sbox, folded.rule, extracted.completion_used, params.key,
                   curve_hash(params.curve)};
}

namespace {

void fnv1a_append(std::uint64_t& hash, const std::string& text) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
}

}  // namespace

std::string curve_hash(const HyperellipticCurve& curve) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  fnv1a_append(hash, curve.field().modulus().get_str());
  fnv1a_append(hash, "|g=" + std::to_string(curve.genus()));
  fnv1a_append(hash, "|h=");
  for (const FieldElement& c : curve.h().coefficients()) {
    fnv1a_append(hash, c.value().get_str() + ",");
  }
  fnv1a_append(hash, "|f=");
  for (const FieldElement& c : curve.f().coefficients()) {
    fnv1a_append(hash, c.value().get_str() + ",");
  }
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = "0123456789abcdef"[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace hecsbox
