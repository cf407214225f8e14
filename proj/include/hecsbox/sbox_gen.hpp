#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecsbox/jacobian.hpp"
#include "hecsbox/sbox.hpp"

namespace hecsbox {

/// How a reduced divisor was read out as a single coordinate pair.
enum class FoldRule {
  kWeight1,       // deg u = 1: the supporting rational point itself
  kWeight2Coeff,  // deg u >= 2: the constant Mumford coefficients (u0, v0)
};

std::string to_string(FoldRule rule);

/// The (x_p, y_p) readout of a reduced divisor.
struct FoldedPoint {
  FieldElement x_p;
  FieldElement y_p;
  FoldRule rule;
};

/// Reads a non-identity reduced divisor out as a coordinate pair.
/// deg u = 1 (u = x + c): x_p = -c, y_p = v0. deg u >= 2: x_p = u0, y_p = v0.
/// Throws IdentityDivisor for the identity.
FoldedPoint fold_divisor(const MumfordDivisor& d);

/// Q = x_p XOR y_p over the canonical integer representatives.
mpz_class xor_fold(const FieldElement& x_p, const FieldElement& y_p);

/// Hexadecimal digits of q, most significant first; q = 0 gives {0}.
std::vector<std::uint8_t> nibble_stream(const mpz_class& q);

struct ExtractResult {
  SBox4 sbox;
  bool completion_used;  // fewer than 16 distinct nibbles were available
};

/// First occurrence of each nibble value, in stream order, topped up with the
/// missing values in ascending order. Always yields a permutation.
ExtractResult extract_unique(const std::vector<std::uint8_t>& nibbles);

struct GenParams {
  HyperellipticCurve curve;
  DivisorInput points;
  mpz_class key;        // delta; any nonnegative size
  int family_size = 1;  // in [1, 16]
};

struct GenResult {
  SBox4 sbox;
  FoldRule fold_rule;
  bool completion_used;
  mpz_class key;
  std::string curve_hash;
};

/// Full generation pipeline: D_m from the weighted points, D_n = key * D_m,
/// fold(D_m + D_n), XOR, nibble extraction. The sum is cross-checked against
/// (key + 1) * D_m computed independently. Throws DegenerateResult when the
/// sum is the identity divisor.
GenResult generate_sbox(const GenParams& params);

/// Deterministic 64-bit FNV-1a digest of the curve description, as 16 lowercase
/// hex digits. Stable across runs and platforms.
std::string curve_hash(const HyperellipticCurve& curve);

}  // namespace hecsbox
