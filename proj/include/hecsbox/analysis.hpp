#pragma once

#include <array>
#include <cstdint>

#include "hecsbox/sbox.hpp"

namespace hecsbox {

/// Boolean function on 4 bits as an explicit 16-entry truth table (0/1).
struct BooleanFunction16 {
  std::array<std::uint8_t, 16> truth_table{};
};

/// Component function f_b(x) = parity(b AND S[x]). Throws ZeroMask for b = 0.
BooleanFunction16 component(const SBox4& s, unsigned mask);

/// W_f(a) = sum_x (-1)^(f(x) XOR a.x), all 16 coefficients, computed by the
/// fast Walsh-Hadamard transform. Parseval: sum of squares = 256.
std::array<int, 16> walsh_spectrum(const BooleanFunction16& f);

/// True iff the table is a permutation of {0,...,15}.
bool is_bijective(const SBox4& s);

/// 8 - max|W|/2 over all nonzero output masks and all input masks.
int nonlinearity(const SBox4& s);

/// Strict-avalanche counts: ones[i][j] = #{x : bit j of S[x] XOR S[x ^ 2^i]}
/// out of 16 inputs; the SAC ideal is 8/16 everywhere.
struct SacMatrix {
  std::array<std::array<int, 4>, 4> ones{};

  /// max |ones[i][j] - 8|, i.e. the worst deviation from 1/2 in sixteenths.
  int max_deviation_sixteenths() const;
};

SacMatrix sac_matrix(const SBox4& s);

/// Maximum algebraic-normal-form degree over all nonzero component functions,
/// via the binary Moebius transform.
int algebraic_degree(const SBox4& s);

/// Maximum difference-distribution-table entry over nonzero input differences.
int differential_uniformity(const SBox4& s);

/// All metrics for one S-box.
struct AnalysisReport {
  bool bijective = false;
  int nonlinearity = 0;
  SacMatrix sac;
  int sac_max_deviation_sixteenths = 0;
  int algebraic_degree = 0;
  int differential_uniformity = 0;
};

AnalysisReport analyze(const SBox4& s);

}  // namespace hecsbox
