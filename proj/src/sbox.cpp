#include "hecsbox/sbox.hpp"

#include <stdexcept>

namespace hecsbox {

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string SBox4::to_hex() const {
  std::string out(16, '0');
  for (std::size_t i = 0; i < 16; ++i) out[i] = kHexDigits[table[i] & 0xF];
  return out;
}

SBox4 SBox4::from_hex(const std::string& text) {
  if (text.size() != 16) {
    throw ParseError("S-box must be exactly 16 hex digits, got " + std::to_string(text.size()));
  }
  SBox4 s;
  for (std::size_t i = 0; i < 16; ++i) {
    const int v = hex_value(text[i]);
    if (v < 0) throw ParseError(std::string("invalid hex digit '") + text[i] + "' in S-box");
    s.table[i] = static_cast<std::uint8_t>(v);
  }
  return s;
}

bool is_permutation(const SBox4& s) {
  std::array<bool, 16> seen{};
  for (std::uint8_t v : s.table) {
    if (v > 15 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<SBox4> shift_family(const SBox4& sb1, int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("family size must be in [1, 16]");
  if (!is_permutation(sb1)) throw NotAPermutation("shift_family requires a permutation");
  std::vector<SBox4> family;
  family.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    SBox4 s;
    for (std::size_t x = 0; x < 16; ++x) {
      s.table[x] = sb1.table[(x + static_cast<std::size_t>(i)) % 16];
    }
    family.push_back(s);
  }
  return family;
}

const SBox4& reference_box() {
  static const SBox4 box = SBox4::from_hex("C56B90AD3EF84712");
  return box;
}

}  // namespace hecsbox
