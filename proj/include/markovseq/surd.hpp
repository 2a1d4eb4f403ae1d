#pragma once

// Exact arithmetic in real quadratic fields: values (p + q·√D) / r.
//
// Normal form: r > 0, gcd(p, q, r) = 1, rational values carry q = D = 0,
// and square factors f² with f < 1000 are moved out of D. Two surds can be
// combined when either is rational or D1·D2 is a perfect square (same
// field); anything else is a mismatched-radicand error.

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "markovseq/bigint.hpp"

namespace markovseq {

class QuadraticSurd {
 public:
  QuadraticSurd() : QuadraticSurd(Int(0)) {}

  explicit QuadraticSurd(Int value) : p_(std::move(value)), q_(0), r_(1), d_(0) {}

  QuadraticSurd(Int p, Int q, Int r, Int d)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (sgn(r_) == 0) throw std::domain_error("QuadraticSurd: zero denominator");
    if (sgn(d_) < 0) throw std::domain_error("QuadraticSurd: negative radicand");
    reduce_radicand();
    normalize();
  }

  static QuadraticSurd from_rational(const Rational& x) {
    return QuadraticSurd(x.get_num(), Int(0), x.get_den(), Int(0));
  }

  /// √n for n >= 0.
  static QuadraticSurd sqrt_of(const Int& n) { return QuadraticSurd(Int(0), Int(1), Int(1), n); }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return sgn(q_) == 0; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }

  /// Sign of the value, decided with integer comparisons only.
  int sign() const {
    const int sp = sgn(p_);
    const int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p² with q²·D
    const int c = cmp(Int(p_ * p_), Int(q_ * q_ * d_));
    if (c == 0) return 0;  // only reachable for square D, which normalisation removes
    return c > 0 ? sp : sq;
  }

  QuadraticSurd operator-() const { return QuadraticSurd(-p_, -q_, r_, d_, Normalized{}); }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    const auto [u, v] = in_common_field(x, y);
    return QuadraticSurd(u.p_ * v.r_ + v.p_ * u.r_, u.q_ * v.r_ + v.q_ * u.r_, u.r_ * v.r_, u.d_,
                         Normalized{});
  }

  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    const auto [u, v] = in_common_field(x, y);
    return QuadraticSurd(u.p_ * v.p_ + u.q_ * v.q_ * u.d_, u.p_ * v.q_ + u.q_ * v.p_, u.r_ * v.r_, u.d_,
                         Normalized{});
  }

  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x * y.reciprocal();
  }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const Int& n) {
    return QuadraticSurd(x.p_ + n * x.r_, x.q_, x.r_, x.d_, Normalized{});
  }

  QuadraticSurd reciprocal() const {
    if (is_zero()) throw std::domain_error("QuadraticSurd: reciprocal of zero");
    // r / (p + q√D) = r (p - q√D) / (p² - q² D)
    Int norm = p_ * p_ - q_ * q_ * d_;
    return QuadraticSurd(r_ * p_, -(r_ * q_), std::move(norm), d_, Normalized{});
  }

  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  /// Decimal expansion truncated (toward zero) after `digits` fractional digits.
  std::string to_decimal(unsigned digits) const {
    if (sign() < 0) {
      std::string s = (-*this).to_decimal(digits);
      return s.find_first_not_of("0.") == std::string::npos ? s : "-" + s;
    }
    // floor((p + q√D) · 10^digits / r) for a nonnegative value
    const Int scale = pow10(digits);
    Int numerator = p_ * scale;
    if (sgn(q_) != 0) {
      const Int root = isqrt(Int(q_ * q_ * d_ * scale * scale));  // floor(|q|√D·10^k)
      // D is not a perfect square here, so |q|√D·10^k is irrational
      numerator += sgn(q_) > 0 ? root : Int(-root - 1);
    }
    Int whole;
    mpz_fdiv_q(whole.get_mpz_t(), numerator.get_mpz_t(), r_.get_mpz_t());
    std::string text = whole.get_str();
    if (digits == 0) return text;
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, 1, '.');
    return text;
  }

  std::string to_string() const {
    if (is_rational()) {
      return r_ == 1 ? p_.get_str() : p_.get_str() + "/" + r_.get_str();
    }
    std::string s = "(" + p_.get_str() + (sgn(q_) < 0 ? " - " : " + ");
    const Int aq = abs(q_);
    if (aq != 1) s += aq.get_str() + "*";
    s += "sqrt(" + d_.get_str() + "))";
    if (r_ != 1) s += "/" + r_.get_str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) { return os << x.to_string(); }

 private:
  struct Normalized {};

  // Components already share a reduced radicand; only sign and gcd are fixed.
  QuadraticSurd(Int p, Int q, Int r, Int d, Normalized)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (sgn(r_) == 0) throw std::domain_error("QuadraticSurd: zero denominator");
    normalize();
  }

  void reduce_radicand() {
    if (sgn(q_) == 0 || sgn(d_) == 0) {
      q_ = 0;
      d_ = 0;
      return;
    }
    if (is_perfect_square(d_)) {
      p_ += q_ * isqrt(d_);
      q_ = 0;
      d_ = 0;
      return;
    }
    for (unsigned long f = 2; f < 1000; ++f) {
      const unsigned long f2 = f * f;
      if (d_ < f2) break;
      while (mpz_divisible_ui_p(d_.get_mpz_t(), f2) != 0) {
        d_ /= f2;
        q_ *= f;
      }
    }
  }

  void normalize() {
    if (sgn(q_) == 0) d_ = 0;
    if (sgn(d_) == 0) q_ = 0;
    if (sgn(r_) < 0) {
      p_ = -p_;
      q_ = -q_;
      r_ = -r_;
    }
    Int g = gcd(gcd(p_, q_), r_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
      r_ /= g;
    }
  }

  // Rewrites x and y over one radicand.
  static std::pair<QuadraticSurd, QuadraticSurd> in_common_field(const QuadraticSurd& x,
                                                                const QuadraticSurd& y) {
    if (x.is_rational() || y.is_rational() || x.d_ == y.d_) {
      const Int& d = x.is_rational() ? y.d_ : x.d_;
      QuadraticSurd u = x;
      QuadraticSurd v = y;
      u.d_ = u.is_rational() ? d : u.d_;
      v.d_ = v.is_rational() ? d : v.d_;
      return {u, v};
    }
    const Int product = x.d_ * y.d_;
    if (!is_perfect_square(product)) {
      throw std::domain_error("QuadraticSurd: radicands " + x.d_.get_str() + " and " + y.d_.get_str() +
                              " lie in different quadratic fields");
    }
    // q√D_y = q·g/D_x·√D_x with g = √(D_x·D_y); move the larger radicand over
    const bool move_y = y.d_ > x.d_;
    const QuadraticSurd& keep = move_y ? x : y;
    const QuadraticSurd& move = move_y ? y : x;
    const Int g = isqrt(product);
    QuadraticSurd moved(move.p_ * keep.d_, move.q_ * g, move.r_ * keep.d_, keep.d_, Normalized{});
    moved.d_ = keep.d_;
    return move_y ? std::pair{keep, moved} : std::pair{moved, keep};
  }

  Int p_;
  Int q_;
  Int r_;
  Int d_;
};

}  // namespace markovseq
