#pragma once

// Markov spectrum values of purely periodic sequences via the Perron
// identity, in exact quadratic-surd arithmetic, plus a bounded lattice scan
// for indefinite binary quadratic forms.
//
// For a doubly infinite periodic sequence with period (a_0, ..., a_{n-1})
// the value at position i is
//
//   λ_i = a_i + [0; a_{i+1}, a_{i+2}, ...] + [0; a_{i-1}, a_{i-2}, ...]
//
// and the spectrum value is max_i λ_i; the Markov element M is its
// reciprocal, the smallest 1/λ_i.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "markovseq/bigint.hpp"
#include "markovseq/surd.hpp"
#include "markovseq/words.hpp"

namespace markovseq {

struct Matrix2 {
  Int a11{1}, a12{0}, a21{0}, a22{1};

  Int det() const { return a11 * a22 - a12 * a21; }
  Int trace() const { return a11 + a22; }
  Matrix2 transposed() const { return {a11, a21, a12, a22}; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }

  bool operator==(const Matrix2&) const = default;
};

namespace detail {

inline void require_period(const Seq& x, const char* what) {
  if (x.empty()) throw std::invalid_argument(std::string(what) + ": empty sequence");
  require_positive(x, what);
}

}  // namespace detail

/// [a_1; a_2, ..., a_n] as an exact rational.
inline Rational cf_eval(const Seq& x) {
  detail::require_period(x, "cf_eval");
  Rational value(x.back());
  for (auto it = x.rbegin() + 1; it != x.rend(); ++it) {
    value = Rational(*it) + 1 / value;
  }
  value.canonicalize();
  return value;
}

/// ∏ [[a_i, 1], [1, 0]].
inline Matrix2 cf_matrix(const Seq& x) {
  detail::require_period(x, "cf_matrix");
  Matrix2 m;
  for (const auto& a : x) {
    // m · [[a, 1], [1, 0]]
    m = Matrix2{m.a11 * a + m.a12, m.a11, m.a21 * a + m.a22, m.a21};
  }
  return m;
}

/// [0; period, period, ...]: the reciprocal of the positive root y of
/// M21·y² + (M22 − M11)·y − M12 = 0 with M = cf_matrix(period).
inline QuadraticSurd zero_tail(const Seq& period) {
  const Matrix2 m = cf_matrix(period);
  const Int disc = m.trace() * m.trace() - 4 * m.det();
  // y = (M11 − M22 + √disc) / (2·M21)
  const QuadraticSurd y(m.a11 - m.a22, Int(1), Int(2 * m.a21), disc);
  return y.reciprocal();
}

struct MarkovValue {
  QuadraticSurd value;
  /// Position attaining the extremum (smallest such index); the per-position
  /// Markov element 1/λ_i is minimal here.
  std::size_t argmin = 0;
};

/// λ_i for every cyclic position i.
inline std::vector<QuadraticSurd> perron_sums(const Seq& period) {
  detail::require_period(period, "perron_sums");
  const std::size_t n = period.size();
  std::vector<QuadraticSurd> sums;
  sums.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Seq forward(n);
    Seq backward(n);
    for (std::size_t j = 0; j < n; ++j) {
      forward[j] = period[(i + 1 + j) % n];
      backward[j] = period[(i + n - 1 - j) % n];
    }
    sums.push_back(zero_tail(forward) + zero_tail(backward) + period[i]);
  }
  return sums;
}

inline MarkovValue markov_value(const Seq& period) {
  auto sums = perron_sums(period);
  std::size_t best = 0;
  for (std::size_t i = 1; i < sums.size(); ++i) {
    if (sums[i] > sums[best]) best = i;
  }
  return {std::move(sums[best]), best};
}

inline QuadraticSurd markov_element(const Seq& period) { return markov_value(period).value.reciprocal(); }

inline bool is_markov_sequence(const Seq& period) {
  return markov_value(period).value < QuadraticSurd(Int(3));
}

// ---------------------------------------------------------------------------
// Binary quadratic forms

struct BQForm {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }

  Int operator()(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
};

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const LatticePoint&) const = default;
};

struct BqfMinimum {
  Int min_abs;
  Int discriminant;
  /// min|f| / √Δ, exact.
  QuadraticSurd normalized;
  LatticePoint point;
};

/// Smallest |f(x, y)| over integer points with 0 < max(|x|, |y|) <= radius.
/// This bounds the infimum from above; it is exact once a minimising point
/// lies inside the box. Since f(−v) = f(v) only the half plane y > 0 or
/// (y = 0, x > 0) is scanned; ties go to the smallest (max-norm, y, x).
inline BqfMinimum bqf_min(const BQForm& form, std::uint32_t radius) {
  const Int disc = form.discriminant();
  if (sgn(disc) <= 0) throw std::invalid_argument("bqf_min: form is not indefinite (discriminant <= 0)");
  if (radius == 0) throw std::invalid_argument("bqf_min: radius must be positive");
  const std::int64_t rad = radius;
  bool found = false;
  Int best;
  LatticePoint best_point;
  auto key = [](const LatticePoint& p) {
    return std::tuple{std::max(std::llabs(p.x), std::llabs(p.y)), p.y, p.x};
  };
  for (std::int64_t y = 0; y <= rad; ++y) {
    for (std::int64_t x = (y == 0 ? 1 : -rad); x <= rad; ++x) {
      Int v = abs(form(Int(static_cast<long>(x)), Int(static_cast<long>(y))));
      const LatticePoint p{x, y};
      if (!found || v < best || (v == best && key(p) < key(best_point))) {
        found = true;
        best = std::move(v);
        best_point = p;
      }
    }
  }
  // min/√Δ = min·√Δ/Δ
  QuadraticSurd normalized(Int(0), best, disc, disc);
  return {best, disc, std::move(normalized), best_point};
}

}  // namespace markovseq
