#include <gtest/gtest.h>

#include <random>

#include "markovseq/tree.hpp"

using namespace markovseq;

namespace {

const Seq kA{1, 1};
const Seq kB{2, 2};

LabelWord L(const char* text) { return parse_labels(text); }

LabelWord center_labels(const Vertex<Label>& v) { return v.center; }

Seq random_seed(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> letter(1, 6);
  Seq x(len(rng));
  for (auto& v : x) v = letter(rng);
  return x;
}

}  // namespace

TEST(Labels, RoundTrip) {
  EXPECT_EQ(to_string(L("ABBA")), "ABBA");
  EXPECT_THROW(parse_labels("ABC"), std::invalid_argument);
  BlockWord<Letter> bw{L("ABB"), kA, kB};
  EXPECT_EQ(bw.flatten(), (Seq{1, 1, 2, 2, 2, 2}));
}

TEST(Moves, FromRoot) {
  const auto r = root(kA, kB);
  EXPECT_EQ(r.left, kA);
  EXPECT_EQ(r.center, (Seq{1, 1, 2, 2}));
  EXPECT_EQ(r.right, kB);
  EXPECT_EQ(step_left(r).center, (Seq{1, 1, 1, 1, 2, 2}));
  const auto lr = root(L("A"), L("B"));
  EXPECT_EQ(step_right(lr).center, L("ABB"));
  EXPECT_EQ(step_left(step_left(lr)).center, L("AAAB"));
  EXPECT_THROW(root(Seq{}, kB), std::invalid_argument);
}

TEST(Paths, Application) {
  const auto r = root(L("A"), L("B"));
  EXPECT_EQ(apply_path(r, Path({0, 1})), step_left(r));
  EXPECT_EQ(apply_path(r, Path({1, 0})), step_right(r));
  EXPECT_EQ(apply_path(r, Path({1, 1})), step_left(step_right(r)));
  EXPECT_EQ(Path::from_moves("LRR").exponents(), (std::vector<std::uint64_t>{0, 1, 2, 0}));
  EXPECT_EQ(Path({0, 1, 0, 1}).canonical(), Path({0, 2}));
}

TEST(Paths, Ordering) {
  EXPECT_TRUE(path_precedes(Path({0, 2}), Path({0, 1, 1, 0})));
  EXPECT_TRUE(path_precedes(Path({0, 1, 1, 0}), Path({1, 1})));
  EXPECT_TRUE(path_precedes(Path({1, 1}), Path({2, 0})));
  EXPECT_FALSE(path_precedes(Path({2, 0}), Path({1, 1})));
  EXPECT_THROW(path_precedes(Path({1}), Path({1, 1})), std::invalid_argument);
}

TEST(Paths, OrderingAgreesWithMoveStrings) {
  for (unsigned len = 1; len <= 7; ++len) {
    std::vector<Path> paths;
    for (unsigned mask = 0; mask < (1U << len); ++mask) {
      std::string moves;
      for (unsigned i = 0; i < len; ++i) moves.push_back((mask >> (len - 1 - i)) & 1U ? 'R' : 'L');
      paths.push_back(Path::from_moves(moves));
    }
    for (const auto& p : paths) {
      for (const auto& q : paths) ASSERT_EQ(path_precedes(p, q), move_order_less(p, q));
    }
  }
}

TEST(Levels, SizesAndCenters) {
  EXPECT_EQ(level(kA, kB, 1).size(), 1U);
  const auto two = level(L("A"), L("B"), 2);
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0].center, L("AAB"));
  EXPECT_EQ(two[1].center, L("ABB"));
  const auto three = level(L("A"), L("B"), 3);
  std::vector<LabelWord> centers;
  for (const auto& v : three) centers.push_back(center_labels(v));
  EXPECT_EQ(centers, (std::vector<LabelWord>{L("AAAB"), L("AABAB"), L("ABABB"), L("ABBB")}));
  EXPECT_THROW(level(kA, kB, 0), std::invalid_argument);
  EXPECT_THROW(level(kA, kB, 21), std::length_error);
}

TEST(Levels, Positions) {
  EXPECT_EQ(level_position(3), (std::pair<unsigned, Index>{2, 1}));
  EXPECT_EQ(level_position(4), (std::pair<unsigned, Index>{2, 2}));
  EXPECT_EQ(level_position(5), (std::pair<unsigned, Index>{3, 1}));
  EXPECT_EQ(level_position(14), (std::pair<unsigned, Index>{4, 6}));
}

TEST(Sequences, Examples) {
  const Seq s14{1, 1, 2, 2, 1, 1, 2, 2, 2, 2, 1, 1, 2, 2, 2, 2};
  EXPECT_EQ(s_graph(kA, kB, 14), s14);
  EXPECT_EQ(s_rec(kA, kB, 14), s14);
  EXPECT_EQ(s_rec(kA, kB, 3), (Seq{1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(s_graph(L("A"), L("B"), 5), L("AAAB"));
  EXPECT_EQ(s_rec(L("A"), L("B"), 5), L("AAAB"));
  EXPECT_EQ(s_rec(L("A"), L("B"), 7), L("ABABB"));
  EXPECT_EQ(block_word(kA, kB, 14).labels, L("ABABBABB"));
  EXPECT_EQ(block_word(kA, kB, 2).labels, L("AB"));
  EXPECT_EQ(block_word(kA, kB, 12).labels, L("AABABAB"));
  EXPECT_EQ(block_word(kA, kB, 14).flatten(), s14);
}

TEST(Sequences, RecursionParts) {
  EXPECT_EQ(recursion_parts(5), (std::pair<Index, Index>{0, 3}));
  EXPECT_EQ(recursion_parts(5, AStarRule::literal), (std::pair<Index, Index>{1, 3}));
  EXPECT_EQ(recursion_parts(7), (std::pair<Index, Index>{2, 4}));
  EXPECT_EQ(recursion_parts(12), (std::pair<Index, Index>{6, 2}));
  EXPECT_THROW(recursion_parts(2), std::invalid_argument);
}

TEST(Sequences, LiteralRuleDivergesAtFive) {
  OrderedSequences<Label> literal(L("A"), L("B"), AStarRule::literal);
  for (Index n = 0; n < 5; ++n) EXPECT_EQ(literal.at(n), s_graph(L("A"), L("B"), n)) << n;
  EXPECT_EQ(literal.at(5), L("BAAB"));
  EXPECT_NE(literal.at(5), s_graph(L("A"), L("B"), 5));
}

TEST(Sequences, FlankIndices) {
  EXPECT_EQ(flank_indices(2), (std::pair<Index, Index>{0, 1}));
  EXPECT_EQ(flank_indices(3), (std::pair<Index, Index>{0, 2}));
  EXPECT_EQ(flank_indices(4), (std::pair<Index, Index>{2, 1}));
  EXPECT_EQ(flank_indices(8), (std::pair<Index, Index>{4, 1}));
  EXPECT_THROW(flank_indices(1), std::invalid_argument);
  auto family = label_sequences();
  for (unsigned m = 2; m <= 9; ++m) {
    const auto vs = level(L("A"), L("B"), m);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Index j = (Index{1} << (m - 1)) + i + 1;
      const auto [l, r] = flank_indices(j);
      ASSERT_EQ(vs[i].left, family.at(l)) << j;
      ASSERT_EQ(vs[i].right, family.at(r)) << j;
      ASSERT_EQ(l, a_star(j - 1));
      ASSERT_EQ(r, a_of(j));
    }
  }
}

TEST(Sequences, HeapIndexing) {
  auto family = label_sequences();
  for (unsigned m = 2; m <= 9; ++m) {
    const auto vs = level(L("A"), L("B"), m);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Index j = (Index{1} << (m - 1)) + i + 1;
      ASSERT_EQ(step_left(vs[i]).center, family.at(2 * j - 1));
      ASSERT_EQ(step_right(vs[i]).center, family.at(2 * j));
      ASSERT_EQ(vs[i].center, concat(vs[i].left, vs[i].right));
    }
  }
}

TEST(Sequences, GraphMatchesRecursionForRandomSeeds) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const Seq a = random_seed(rng);
    const Seq b = random_seed(rng);
    OrderedSequences<Letter> family(a, b);
    for (unsigned m = 2; m <= 8; ++m) {
      const auto vs = level(a, b, m);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        ASSERT_EQ(vs[i].center, family.at((Index{1} << (m - 1)) + i + 1));
      }
    }
  }
}

TEST(Sequences, Lengths) {
  OrderedSequences<Letter> family(kA, kB);
  for (Index n = 1; n <= 2000; ++n) {
    ASSERT_EQ(family.length(n), 2 * stern(2 * n - 1)) << n;
    ASSERT_EQ(family.length(n), family.at(n).size());
  }
  OrderedSequences<Letter> uneven(Seq{1, 2, 1}, Seq{3});
  for (Index n = 0; n <= 500; ++n) {
    const auto [ca, cb] = uneven.block_counts(n);
    ASSERT_EQ(uneven.at(n).size(), 3 * ca + cb);
  }
}
