#pragma once

// The concatenation graph G_{A,B} and the ordered sequences S(n).
//
// Vertices are triples (left, left ⊕ right, right) grown from the root
// (A, A⊕B, B) by
//
//   L(x, y, z) = (x, x⊕y, y)      R(x, y, z) = (y, y⊕z, z).
//
// The root is level 1 and level n holds the 2^{n-1} vertices reached by
// n-1 moves. S(0)=A, S(1)=B, S(2)=A⊕B and S(2^{n-1}+i) is the center of the
// i-th vertex of level n in path order. Two constructions are provided:
// s_graph() enumerates and sorts a whole level, s_rec() uses
//
//   S(2j)   = S(j) ⊕ S(a(j))
//   S(2j-1) = S(a*(j-1)) ⊕ S(j)        (j >= 2).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markovseq/diatomic.hpp"
#include "markovseq/words.hpp"

namespace markovseq {

// ---------------------------------------------------------------------------
// Block labels

enum class Label : unsigned char { A, B };

using LabelWord = Word<Label>;

inline char to_char(Label l) { return l == Label::A ? 'A' : 'B'; }

inline std::ostream& operator<<(std::ostream& os, Label l) { return os << to_char(l); }

inline std::string to_string(const LabelWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Label l : w) s.push_back(to_char(l));
  return s;
}

inline LabelWord parse_labels(std::string_view text) {
  LabelWord w;
  w.reserve(text.size());
  for (char c : text) {
    if (c == 'A') {
      w.push_back(Label::A);
    } else if (c == 'B') {
      w.push_back(Label::B);
    } else {
      throw std::invalid_argument("parse_labels: expected only 'A' and 'B'");
    }
  }
  return w;
}

/// A word over {A, B} together with the sequences the labels stand for.
template <class T>
struct BlockWord {
  LabelWord labels;
  Word<T> a;
  Word<T> b;

  const Word<T>& image(Label l) const { return l == Label::A ? a : b; }

  Word<T> flatten() const {
    Word<T> out;
    for (Label l : labels) append(out, image(l));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Vertices and moves

template <class T>
struct Vertex {
  Word<T> left;
  Word<T> center;
  Word<T> right;

  bool operator==(const Vertex&) const = default;
};

template <class T>
Vertex<T> root(Word<T> a, Word<T> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("root: seed sequences must be nonempty");
  Word<T> center = concat(a, b);
  return {std::move(a), std::move(center), std::move(b)};
}

template <class T>
Vertex<T> step_left(const Vertex<T>& v) {
  return {v.left, concat(v.left, v.center), v.center};
}

template <class T>
Vertex<T> step_right(const Vertex<T>& v) {
  return {v.center, concat(v.center, v.right), v.right};
}

// ---------------------------------------------------------------------------
// Paths

/// Run-length exponents (α_1, α_2, ...) of alternating R and L moves; α_1
/// counts the R moves applied first, α_2 the L moves applied next, and so on.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<std::uint64_t> exponents) : exponents_(std::move(exponents)) {}

  /// Builds the canonical path of a move string in application order ("LRR").
  static Path from_moves(std::string_view moves) {
    std::vector<std::uint64_t> e;
    char expected = 'R';
    std::uint64_t run = 0;
    for (char c : moves) {
      if (c != 'L' && c != 'R') throw std::invalid_argument("Path::from_moves: expected L or R");
      if (c != expected) {
        e.push_back(run);
        run = 0;
        expected = c;
      }
      ++run;
    }
    e.push_back(run);
    if (e.size() % 2 != 0) e.push_back(0);
    return Path(std::move(e));
  }

  const std::vector<std::uint64_t>& exponents() const { return exponents_; }

  std::uint64_t sum() const {
    std::uint64_t s = 0;
    for (auto x : exponents_) s += x;
    return s;
  }

  /// Moves in application order.
  std::string moves() const {
    std::string m;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      m.append(exponents_[i], i % 2 == 0 ? 'R' : 'L');
    }
    return m;
  }

  /// Interior zero exponents merged away, padded to even length.
  Path canonical() const { return from_moves(moves()); }

  bool operator==(const Path&) const = default;

 private:
  std::vector<std::uint64_t> exponents_;
};

template <class T>
Vertex<T> apply_path(Vertex<T> v, const Path& p) {
  const auto& e = p.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::uint64_t k = 0; k < e[i]; ++k) v = (i % 2 == 0) ? step_right(v) : step_left(v);
  }
  return v;
}

/// The vertex ordering ≺ on paths of equal exponent sum: at the first
/// differing exponent, a larger L-run (even position) or a smaller R-run
/// (odd position) comes first.
inline bool path_precedes(const Path& p, const Path& q) {
  if (p.sum() != q.sum()) throw std::invalid_argument("path_precedes: paths lie on different levels");
  auto a = p.canonical().exponents();
  auto b = q.canonical().exponents();
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    const bool even_position = (i + 1) % 2 == 0;
    return even_position ? a[i] > b[i] : a[i] < b[i];
  }
  return false;
}

/// Same order expressed on move strings: lexicographic with L < R.
inline bool move_order_less(const Path& p, const Path& q) { return p.moves() < q.moves(); }

/// A vertex of a level together with the path that reaches it.
template <class T>
struct PlacedVertex {
  Path path;
  Vertex<T> vertex;
};

/// Vertices of level n (root = level 1), sorted by ≺. Levels above 20 are
/// rejected as impractical.
template <class T>
std::vector<PlacedVertex<T>> level_with_paths(const Word<T>& a, const Word<T>& b, unsigned n) {
  if (n == 0) throw std::invalid_argument("level: levels are numbered from 1");
  if (n > 20) throw std::length_error("level: level too deep to enumerate");
  struct Node {
    std::string moves;
    Vertex<T> vertex;
  };
  std::vector<Node> frontier{{"", root(a, b)}};
  for (unsigned depth = 1; depth < n; ++depth) {
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (const auto& node : frontier) {
      next.push_back({node.moves + 'L', step_left(node.vertex)});
      next.push_back({node.moves + 'R', step_right(node.vertex)});
    }
    frontier = std::move(next);
  }
  std::vector<PlacedVertex<T>> out;
  out.reserve(frontier.size());
  for (auto& node : frontier) out.push_back({Path::from_moves(node.moves), std::move(node.vertex)});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return path_precedes(x.path, y.path);
  });
  return out;
}

template <class T>
std::vector<Vertex<T>> level(const Word<T>& a, const Word<T>& b, unsigned n) {
  std::vector<Vertex<T>> out;
  for (auto& pv : level_with_paths(a, b, n)) out.push_back(std::move(pv.vertex));
  return out;
}

/// Level m and position i (1-based) of S(n) for n >= 3.
inline std::pair<unsigned, Index> level_position(Index n) {
  if (n < 3) throw std::invalid_argument("level_position: defined for n >= 3");
  const auto m = static_cast<unsigned>(std::bit_width(n - 1));
  return {m, n - (Index{1} << (m - 1))};
}

/// S(n) straight from the ordered graph. Enumerates a whole level; meant as
/// the slow reference construction.
template <class T>
Word<T> s_graph(const Word<T>& a, const Word<T>& b, Index n) {
  if (a.empty() || b.empty()) throw std::invalid_argument("s_graph: seed sequences must be nonempty");
  if (n == 0) return a;
  if (n == 1) return b;
  if (n == 2) return concat(a, b);
  const auto [m, i] = level_position(n);
  auto vertices = level(a, b, m);
  return std::move(vertices[i - 1].center);
}

// ---------------------------------------------------------------------------
// Recursive construction

/// Indices (l, r) with S(n) = S(l) ⊕ S(r), for n >= 3.
inline std::pair<Index, Index> recursion_parts(Index n, AStarRule rule = AStarRule::corrected) {
  if (n < 3) throw std::invalid_argument("recursion_parts: defined for n >= 3");
  if (n % 2 == 0) {
    const Index j = n / 2;
    return {j, a_of(j)};
  }
  const Index j = (n + 1) / 2;
  return {a_star(j - 1, rule), j};
}

/// Left and right flank indices of the vertex centered at S(j), j >= 2.
inline std::pair<Index, Index> flank_indices(Index j) {
  if (j < 2) throw std::invalid_argument("flank_indices: index must be at least 2");
  if (j == 2) return {0, 1};
  if (j % 2 == 0) return {j / 2, flank_indices(j / 2).second};
  const Index parent = (j + 1) / 2;
  return {flank_indices(parent).first, parent};
}

/// Memoised S(n) for fixed seeds. Not synchronised: use one instance per
/// thread.
template <class T>
class OrderedSequences {
 public:
  OrderedSequences(Word<T> a, Word<T> b, AStarRule rule = AStarRule::corrected)
      : rule_(rule), a_len_(a.size()), b_len_(b.size()) {
    if (a.empty() || b.empty()) {
      throw std::invalid_argument("OrderedSequences: seed sequences must be nonempty");
    }
    cache_.resize(3);
    cache_[2] = concat(a, b);
    cache_[0] = std::move(a);
    cache_[1] = std::move(b);
  }

  const Word<T>& seed_a() const { return *cache_[0]; }
  const Word<T>& seed_b() const { return *cache_[1]; }

  const Word<T>& at(Index n) {
    if (n >= cache_.size()) cache_.resize(n + 1);
    if (!cache_[n]) {
      const auto [l, r] = recursion_parts(n, rule_);
      Word<T> s = at(l);
      append(s, at(r));
      cache_[n] = std::move(s);
    }
    return *cache_[n];
  }

  /// Number of A and B blocks in S(n), without materialising it.
  std::pair<std::uint64_t, std::uint64_t> block_counts(Index n) {
    if (n >= counts_.size()) counts_.resize(n + 1);
    if (n == 0) return {1, 0};
    if (n == 1) return {0, 1};
    if (n == 2) return {1, 1};
    if (!counts_[n]) {
      const auto [l, r] = recursion_parts(n, rule_);
      const auto x = block_counts(l);
      const auto y = block_counts(r);
      counts_[n] = std::pair{x.first + y.first, x.second + y.second};
    }
    return *counts_[n];
  }

  std::uint64_t length(Index n) {
    const auto [ca, cb] = block_counts(n);
    return ca * a_len_ + cb * b_len_;
  }

 private:
  AStarRule rule_;
  std::size_t a_len_;
  std::size_t b_len_;
  std::vector<std::optional<Word<T>>> cache_;
  std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> counts_;
};

/// The block words S_{A,B}(n) over the labels themselves.
inline OrderedSequences<Label> label_sequences() {
  return OrderedSequences<Label>(LabelWord{Label::A}, LabelWord{Label::B});
}

template <class T>
Word<T> s_rec(const Word<T>& a, const Word<T>& b, Index n, AStarRule rule = AStarRule::corrected) {
  OrderedSequences<T> family(a, b, rule);
  return family.at(n);
}

template <class T>
BlockWord<T> block_word(const Word<T>& a, const Word<T>& b, Index n) {
  if (a.empty() || b.empty()) throw std::invalid_argument("block_word: seed sequences must be nonempty");
  auto labels = label_sequences();
  return {labels.at(n), a, b};
}

}  // namespace markovseq
