#include "hecsbox/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace hecsbox {

namespace {

int parity4(unsigned v) { return std::popcount(v & 0xFu) & 1; }

}  // namespace

BooleanFunction16 component(const SBox4& s, unsigned mask) {
  if (mask == 0) throw ZeroMask("component function requires a nonzero output mask");
  BooleanFunction16 f;
  for (unsigned x = 0; x < 16; ++x) {
    f.truth_table[x] = static_cast<std::uint8_t>(parity4(mask & s.table[x]));
  }
  return f;
}

std::array<int, 16> walsh_spectrum(const BooleanFunction16& f) {
  std::array<int, 16> w;
  for (unsigned x = 0; x < 16; ++x) w[x] = f.truth_table[x] ? -1 : 1;
  for (unsigned step = 1; step < 16; step <<= 1) {
    for (unsigned block = 0; block < 16; block += step << 1) {
      for (unsigned i = block; i < block + step; ++i) {
        const int a = w[i];
        const int b = w[i + step];
        w[i] = a + b;
        w[i + step] = a - b;
      }
    }
  }
  return w;
}

bool is_bijective(const SBox4& s) { return is_permutation(s); }

int nonlinearity(const SBox4& s) {
  int max_abs = 0;
  for (unsigned b = 1; b < 16; ++b) {
    const auto w = walsh_spectrum(component(s, b));
    for (int coeff : w) max_abs = std::max(max_abs, std::abs(coeff));
  }
  return 8 - max_abs / 2;
}

SacMatrix sac_matrix(const SBox4& s) {
  SacMatrix m;
  for (int i = 0; i < 4; ++i) {
    for (unsigned x = 0; x < 16; ++x) {
      const unsigned diff = s.table[x] ^ s.table[x ^ (1u << i)];
      for (int j = 0; j < 4; ++j) {
        m.ones[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            static_cast<int>((diff >> j) & 1u);
      }
    }
  }
  return m;
}

int SacMatrix::max_deviation_sixteenths() const {
  int worst = 0;
  for (const auto& row : ones) {
    for (int count : row) worst = std::max(worst, std::abs(count - 8));
  }
  return worst;
}

int algebraic_degree(const SBox4& s) {
  int degree = 0;
  for (unsigned b = 1; b < 16; ++b) {
    std::array<std::uint8_t, 16> anf = component(s, b).truth_table;
    // Binary Moebius transform.
    for (unsigned step = 1; step < 16; step <<= 1) {
      for (unsigned block = 0; block < 16; block += step << 1) {
        for (unsigned i = block; i < block + step; ++i) {
          anf[i + step] = static_cast<std::uint8_t>(anf[i + step] ^ anf[i]);
        }
      }
    }
    for (unsigned monomial = 0; monomial < 16; ++monomial) {
      if (anf[monomial]) degree = std::max(degree, std::popcount(monomial));
    }
  }
  return degree;
}

int differential_uniformity(const SBox4& s) {
  int worst = 0;
  for (unsigned a = 1; a < 16; ++a) {
    std::array<int, 16> row{};
    for (unsigned x = 0; x < 16; ++x) {
      ++row[s.table[x ^ a] ^ s.table[x]];
    }
    for (int count : row) worst = std::max(worst, count);
  }
  return worst;
}

AnalysisReport analyze(const SBox4& s) {
  AnalysisReport report;
  report.bijective = is_bijective(s);
  report.nonlinearity = nonlinearity(s);
  report.sac = sac_matrix(s);
  report.sac_max_deviation_sixteenths = report.sac.max_deviation_sixteenths();
  report.algebraic_degree = algebraic_degree(s);
  report.differential_uniformity = differential_uniformity(s);

  if (report.bijective) {
    // Exact bounds for 4-bit permutations.
    if (report.nonlinearity < 0 || report.nonlinearity > 4 || report.algebraic_degree < 1 ||
        report.algebraic_degree > 3 || report.differential_uniformity < 2 ||
        report.differential_uniformity % 2 != 0) {
      throw std::logic_error("analysis produced out-of-range metrics for a permutation");
    }
  }
  return report;
}

}  // namespace hecsbox
