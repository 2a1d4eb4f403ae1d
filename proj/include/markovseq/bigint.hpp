#pragma once

// Arbitrary-precision integer helpers on top of GMP's C++ interface.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace markovseq {

using Int = mpz_class;
using Rational = mpq_class;

inline bool is_perfect_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int pow10(unsigned long exponent) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::optional<std::uint64_t> to_u64(const Int& n) {
  if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return std::nullopt;
  // mpz_get_ui is only guaranteed to hold an unsigned long
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

/// Parses an optionally signed decimal integer; the whole token must be digits.
inline std::optional<Int> parse_int(std::string_view token, bool allow_sign = true) {
  std::string_view digits = token;
  if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  std::string text(token.front() == '+' ? token.substr(1) : token);
  return Int(text, 10);
}

}  // namespace markovseq
