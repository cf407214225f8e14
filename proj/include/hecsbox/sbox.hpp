#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hecsbox/errors.hpp"

namespace hecsbox {

/// A 4-bit substitution table: 16 entries, each in [0, 15]. Entry i is the
/// image of input i; rendered as 16 hex digits with entry 0 first.
struct SBox4 {
  std::array<std::uint8_t, 16> table{};

  std::uint8_t operator[](std::size_t i) const { return table[i]; }

  /// 16 uppercase hex digits, entry 0 first.
  std::string to_hex() const;
  /// Parses exactly 16 hex digits (either case). Throws ParseError.
  static SBox4 from_hex(const std::string& text);

  friend bool operator==(const SBox4& a, const SBox4& b) { return a.table == b.table; }
  friend bool operator!=(const SBox4& a, const SBox4& b) { return !(a == b); }
};

/// True iff the 16 entries are a permutation of {0,...,15}.
bool is_permutation(const SBox4& s);

/// [Sb_1, ..., Sb_n] where Sb_{i+1}[x] = Sb_1[(x + i) mod 16], i.e. the 64-bit
/// word rotated left by 4*i bits. Requires n in [1, 16] and a permutation
/// input (NotAPermutation otherwise).
std::vector<SBox4> shift_family(const SBox4& sb1, int n);

/// Built-in reference table the compare command measures against.
const SBox4& reference_box();

}  // namespace hecsbox
