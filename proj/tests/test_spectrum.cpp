#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "markovseq/spectrum.hpp"
#include "markovseq/tree.hpp"

using namespace markovseq;

namespace {

QuadraticSurd S(long p, long q, long r, long d) { return QuadraticSurd(Int(p), Int(q), Int(r), Int(d)); }

// [0; x_0, x_1, ...] cut off after `depth` partial quotients.
long double truncated_tail(const std::vector<long>& x, std::size_t start, int step, int depth) {
  const long n = static_cast<long>(x.size());
  long double t = 0;
  for (int k = depth; k >= 1; --k) {
    const long idx = ((static_cast<long>(start) + step * k) % n + n) % n;
    t = 1.0L / (static_cast<long double>(x[idx]) + t);
  }
  return t;
}

long double truncated_value(const std::vector<long>& x) {
  long double best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double v = x[i] + truncated_tail(x, i, 1, 60) + truncated_tail(x, i, -1, 60);
    best = std::max(best, v);
  }
  return best;
}

Seq to_seq(const std::vector<long>& x) {
  Seq s;
  for (long v : x) s.emplace_back(v);
  return s;
}

std::vector<long> random_period(std::mt19937_64& rng, int max_len, int max_letter) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<long> letter(1, max_letter);
  std::vector<long> x(len(rng));
  for (auto& v : x) v = letter(rng);
  return x;
}

}  // namespace

TEST(ContinuedFractions, Evaluation) {
  EXPECT_EQ(cf_eval(Seq{2}), Rational(2));
  EXPECT_EQ(cf_eval(Seq{1, 1, 1}), Rational(3, 2));
  EXPECT_EQ(cf_eval(Seq{2, 2, 1, 1}), Rational(12, 5));
  EXPECT_THROW(cf_eval(Seq{}), std::invalid_argument);
  EXPECT_THROW(cf_eval(Seq{1, 0}), std::invalid_argument);
}

TEST(ContinuedFractions, Matrices) {
  EXPECT_EQ(cf_matrix(Seq{2}), (Matrix2{2, 1, 1, 0}));
  EXPECT_EQ(cf_matrix(Seq{1, 1}), (Matrix2{2, 1, 1, 1}));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Seq x = to_seq(random_period(rng, 12, 5));
    const Matrix2 m = cf_matrix(x);
    EXPECT_EQ(m.det(), x.size() % 2 == 0 ? 1 : -1);
    EXPECT_EQ(Rational(m.a11, m.a21), cf_eval(x));
    EXPECT_EQ(cf_matrix(reverse(x)), m.transposed());
  }
}

TEST(ContinuedFractions, LongPeriodsNeedBigIntegers) {
  const Matrix2 m = cf_matrix(Seq(100, 2));
  EXPECT_GT(m.a11, Int("18446744073709551615"));
}

TEST(ZeroTail, FixedPoints) {
  EXPECT_EQ(zero_tail(Seq{1, 1}), S(-1, 1, 2, 5));
  EXPECT_EQ(zero_tail(Seq{2, 2}), S(-1, 1, 1, 2));
  EXPECT_EQ(zero_tail(Seq{1}), S(-1, 1, 2, 5));
}

TEST(ZeroTail, Invariants) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Seq x = to_seq(random_period(rng, 12, 6));
    const auto t = zero_tail(x);
    ASSERT_GT(t, QuadraticSurd());
    ASSERT_LT(t, QuadraticSurd(Int(1)));
    const Matrix2 m = cf_matrix(x);
    const auto residual = QuadraticSurd(m.a21) + t * QuadraticSurd(Int(m.a22 - m.a11)) -
                          t * t * QuadraticSurd(m.a12);
    ASSERT_TRUE(residual.is_zero());
    ASSERT_EQ(t.radicand(), zero_tail(reverse(x)).radicand());
  }
}

TEST(MarkovValue, ClassicalPeriods) {
  EXPECT_EQ(markov_value(Seq{1, 1}).value, QuadraticSurd::sqrt_of(5));
  EXPECT_EQ(markov_value(Seq{2, 2}).value, QuadraticSurd::sqrt_of(8));
  const auto v = markov_value(Seq{2, 2, 1, 1});
  EXPECT_EQ(v.value, S(0, 1, 5, 221));
  EXPECT_EQ(v.argmin, 0U);
  EXPECT_EQ(markov_value(Seq{1, 1, 2, 2}).argmin, 2U);
  EXPECT_EQ(markov_element(Seq{1, 1}), S(0, 1, 5, 5));
  EXPECT_EQ(markov_element(Seq{2, 2}), QuadraticSurd::sqrt_of(8).reciprocal());
  EXPECT_GT(markov_element(Seq{1, 1}), QuadraticSurd::from_rational(Rational(1, 3)));
}

TEST(MarkovValue, Predicate) {
  EXPECT_TRUE(is_markov_sequence(Seq{1, 1}));
  EXPECT_TRUE(is_markov_sequence(Seq{2, 2, 1, 1}));
  EXPECT_FALSE(is_markov_sequence(Seq{3}));
  auto family = OrderedSequences<Letter>(Seq{1, 1}, Seq{2, 2});
  for (Index n = 1; n <= 64; ++n) EXPECT_TRUE(is_markov_sequence(family.at(n))) << n;
}

TEST(MarkovValue, RotationInvariance) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Seq x = to_seq(random_period(rng, 8, 4));
    const auto v = markov_value(x).value;
    for (std::uint64_t k = 1; k < x.size(); ++k) ASSERT_EQ(markov_value(rotate(x, k)).value, v);
  }
}

TEST(MarkovValue, TruncationOracle) {
  std::mt19937_64 rng(8);
  const std::vector<std::vector<long>> fixed{{1, 1}, {2, 2}, {2, 2, 1, 1}};
  std::vector<std::vector<long>> periods = fixed;
  for (int trial = 0; trial < 200; ++trial) periods.push_back(random_period(rng, 12, 4));
  for (const auto& p : periods) {
    const long double oracle = truncated_value(p);
    const long double exact = std::stold(markov_value(to_seq(p)).value.to_decimal(18));
    ASSERT_NEAR(exact, oracle, 1e-10L) << format_seq(to_seq(p));
  }
}

TEST(Bqf, Minima) {
  const auto golden = bqf_min({1, 1, -1}, 50);
  EXPECT_EQ(golden.min_abs, 1);
  EXPECT_EQ(golden.discriminant, 5);
  EXPECT_EQ(golden.normalized, S(0, 1, 5, 5));
  EXPECT_EQ(golden.point, (LatticePoint{1, 0}));
  const auto silver = bqf_min({1, 2, -1}, 50);
  EXPECT_EQ(silver.min_abs, 1);
  EXPECT_EQ(silver.normalized, QuadraticSurd::sqrt_of(8).reciprocal());
  EXPECT_THROW(bqf_min({1, 0, 1}, 50), std::invalid_argument);
  EXPECT_THROW(bqf_min({1, 1, -1}, 0), std::invalid_argument);
}

TEST(Bqf, PerronCrossCheck) {
  for (std::uint32_t radius = 3; radius <= 20; ++radius) {
    EXPECT_EQ(bqf_min({1, 1, -1}, radius).normalized, markov_value(Seq{1, 1}).value.reciprocal());
    EXPECT_EQ(bqf_min({1, 2, -1}, radius).normalized, markov_value(Seq{2, 2}).value.reciprocal());
  }
  const auto f = bqf_min({1, 1, -1}, 1);
  EXPECT_EQ(f.min_abs, 1);
}

TEST(Bqf, AttainingPointIsConsistent) {
  const BQForm form{5, 11, -5};
  const auto m = bqf_min(form, 25);
  EXPECT_EQ(abs(form(Int(static_cast<long>(m.point.x)), Int(static_cast<long>(m.point.y)))), m.min_abs);
  EXPECT_EQ(m.discriminant, 221);
  EXPECT_EQ(m.normalized, S(0, 1, 221, 221) * QuadraticSurd(m.min_abs));
  EXPECT_EQ(m.min_abs, 5);
  EXPECT_EQ(m.normalized, markov_value(Seq{2, 2, 1, 1}).value.reciprocal());
}
