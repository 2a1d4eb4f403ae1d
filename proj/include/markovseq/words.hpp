#pragma once

// Finite words: concatenation, circular shifts, reversal and the
// palindromicity predicates. The algorithms are generic over the letter
// type so the same code serves integer sequences and block-label words.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "markovseq/bigint.hpp"

namespace markovseq {

template <class T>
using Word = std::vector<T>;

/// A letter of a sequence: a positive integer (partial quotient).
using Letter = Int;
using Seq = Word<Letter>;

template <class T>
Word<T> concat(const Word<T>& x, const Word<T>& y) {
  Word<T> out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

template <class T>
void append(Word<T>& x, const Word<T>& y) {
  x.insert(x.end(), y.begin(), y.end());
}

template <class T>
Word<T> reverse(Word<T> x) {
  std::reverse(x.begin(), x.end());
  return x;
}

/// Left rotation: the element at zero-based position `i mod |x|` comes first.
template <class T>
Word<T> rotate(const Word<T>& x, std::uint64_t i) {
  if (x.empty()) throw std::invalid_argument("rotate: empty sequence");
  Word<T> out(x);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(i % x.size()), out.end());
  return out;
}

template <class T>
bool is_palindrome(const Word<T>& x) {
  return std::equal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(x.size() / 2), x.rbegin());
}

/// is_palindrome(rotate(x, k)) without materialising the rotation.
template <class T>
bool is_palindromic_rotation(const Word<T>& x, std::uint64_t k) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("is_palindromic_rotation: empty sequence");
  const std::size_t s = k % n;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (!(x[(s + i) % n] == x[(s + n - 1 - i) % n])) return false;
  }
  return true;
}

/// Smallest shift k making rotate(x, k) a palindrome, for even-length x.
template <class T>
std::optional<std::uint64_t> evenly_palindromic_shift(const Word<T>& x) {
  if (x.empty() || x.size() % 2 != 0) {
    throw std::invalid_argument("evenly_palindromic_shift: length must be even and positive");
  }
  for (std::uint64_t k = 0; k < x.size(); ++k) {
    if (is_palindromic_rotation(x, k)) return k;
  }
  return std::nullopt;
}

template <class T>
bool is_oddly_palindromic(const Word<T>& x) {
  if (x.size() % 2 == 0) throw std::invalid_argument("is_oddly_palindromic: length must be odd");
  for (std::uint64_t k = 0; k < x.size(); ++k) {
    if (is_palindromic_rotation(x, k)) return true;
  }
  return false;
}

/// First floor(m/2) elements.
template <class T>
Word<T> half_floor(const Word<T>& x) {
  if (x.empty()) throw std::invalid_argument("half_floor: empty sequence");
  return Word<T>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(x.size() / 2));
}

/// Remaining elements, so that half_floor(x) ⊕ half_ceil(x) == x.
template <class T>
Word<T> half_ceil(const Word<T>& x) {
  if (x.empty()) throw std::invalid_argument("half_ceil: empty sequence");
  return Word<T>(x.begin() + static_cast<std::ptrdiff_t>(x.size() / 2), x.end());
}

// ---------------------------------------------------------------------------
// Text form: comma-separated decimal integers without spaces, "2,2,1,1".

inline Seq parse_seq(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty sequence literal");
  Seq out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    auto value = parse_int(token, /*allow_sign=*/false);
    if (!value || sgn(*value) <= 0) {
      throw std::invalid_argument("malformed sequence element '" + std::string(token) + "' in '" +
                                  std::string(text) + "'");
    }
    out.push_back(std::move(*value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class T>
std::string format_seq(const Word<T>& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os.str();
}

/// Throws unless every letter is a positive integer.
inline void require_positive(const Seq& x, std::string_view what) {
  for (const auto& v : x) {
    if (sgn(v) <= 0) throw std::invalid_argument(std::string(what) + ": letters must be positive");
  }
}

}  // namespace markovseq
