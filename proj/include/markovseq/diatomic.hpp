#pragma once

// Stern's diatomic sequence d_n and the index sequences a(j), a*(j) that
// drive the recursive construction of the ordered sequences S(n).
//
//   d_0 = 0, d_1 = 1, d_{2n} = d_n, d_{2n-1} = d_n + d_{n-1}
//   a(1) = a(2) = 1, a(2j) = a(j), a(2j-1) = j
//   a*(x) = 0 if x is a power of two, a(x) otherwise
//
// d_n < F_65 < 2^63 for every 64-bit index, so values never overflow.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace markovseq {

using Index = std::uint64_t;

/// d_n by walking the binary expansion of n from the low bit (O(log n)).
constexpr std::uint64_t stern(Index n) noexcept {
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  while (n != 0) {
    if (n & 1U) {
      b += a;
    } else {
      a += b;
    }
    n >>= 1U;
  }
  return b;
}

constexpr bool is_power_of_two(Index x) noexcept { return std::has_single_bit(x); }

inline Index a_of(Index j) {
  if (j == 0) throw std::invalid_argument("a_of: index must be positive");
  j >>= std::countr_zero(j);
  return (j + 1) / 2;
}

/// Corrected a*: zero exactly on powers of two (including 1).
inline Index a_star(Index x) {
  if (x == 0) throw std::invalid_argument("a_star: index must be positive");
  return is_power_of_two(x) ? 0 : a_of(x);
}

/// a* exactly as first written (zero only at 1). Kept to reproduce the
/// disagreement with the graph construction at S(5).
inline Index a_star_literal(Index x) {
  if (x == 0) throw std::invalid_argument("a_star_literal: index must be positive");
  return x == 1 ? 0 : a_of(x);
}

enum class AStarRule { corrected, literal };

inline Index a_star(Index x, AStarRule rule) {
  return rule == AStarRule::corrected ? a_star(x) : a_star_literal(x);
}

/// (d_{2^n}, ..., d_{2^{n+1}}), the n-th row of the diatomic array.
inline std::vector<std::uint64_t> stern_row(unsigned n) {
  if (n > 30) throw std::length_error("stern_row: row too large");
  const Index first = Index{1} << n;
  std::vector<std::uint64_t> row;
  row.reserve(first + 1);
  for (Index i = first; i <= 2 * first; ++i) row.push_back(stern(i));
  return row;
}

}  // namespace markovseq
