#pragma once

// Executable checks of the palindromicity results for the ordered sequences
// S(n) and of the supporting index and length identities.
//
// Every check produces a VerificationReport; batch drivers hand each report
// to a caller-supplied sink instead of stopping at the first failure.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "markovseq/diatomic.hpp"
#include "markovseq/tree.hpp"
#include "markovseq/words.hpp"

namespace markovseq {

struct VerificationReport {
  std::string claim;
  Index n = 0;
  bool pass = false;
  std::string witness;
  std::optional<std::string> counterexample;
};

namespace detail {

inline VerificationReport make_report(std::string claim, Index n, bool pass, std::string witness,
                                      const std::function<std::string()>& counterexample = {}) {
  VerificationReport r{std::move(claim), n, pass, std::move(witness), std::nullopt};
  if (!pass && counterexample) r.counterexample = counterexample();
  return r;
}

inline void require_palindromic_seed(const Seq& x, const char* what) {
  if (x.empty()) throw std::invalid_argument(std::string(what) + ": seed sequences must be nonempty");
  if (!is_palindrome(x)) throw std::invalid_argument(std::string(what) + ": seed sequences must be palindromic");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Circular-shift form: C_{d_n}(S(n)) is a palindrome for A=(a,a), B=(b,b).

inline VerificationReport verify_prop_main(OrderedSequences<Letter>& family, Index n) {
  if (n == 0) throw std::invalid_argument("verify_prop_main: n must be positive");
  const Seq& s = family.at(n);
  const std::uint64_t shift = stern(n);
  const bool pass = is_palindromic_rotation(s, shift);
  return detail::make_report("prop-main", n, pass, "shift=" + std::to_string(shift),
                             [&] { return format_seq(rotate(s, shift)); });
}

inline OrderedSequences<Letter> doubled_seeds(const Int& a_sym, const Int& b_sym) {
  if (sgn(a_sym) <= 0 || sgn(b_sym) <= 0) throw std::invalid_argument("letters must be positive");
  if (a_sym == b_sym) throw std::invalid_argument("the two seed letters must differ");
  return OrderedSequences<Letter>(Seq{a_sym, a_sym}, Seq{b_sym, b_sym});
}

inline VerificationReport verify_prop_main(const Int& a_sym, const Int& b_sym, Index n) {
  auto family = doubled_seeds(a_sym, b_sym);
  return verify_prop_main(family, n);
}

// ---------------------------------------------------------------------------
// Block-rearrangement form for arbitrary palindromic seeds.

/// Rearranges the blocks Λ_1…Λ_N of S(n) (given by `labels`) around d_n:
///   d_n even:            Λ_{d/2+1} … Λ_N Λ_1 … Λ_{d/2}
///   d_n odd, c=(d+1)/2:  ⌈Λ_c⌉ Λ_{c+1} … Λ_N Λ_1 … Λ_{c-1} ⌊Λ_c⌋
inline Seq theorem_main_arrangement(const LabelWord& labels, const Seq& a, const Seq& b, Index n) {
  detail::require_palindromic_seed(a, "theorem_main_arrangement");
  detail::require_palindromic_seed(b, "theorem_main_arrangement");
  if (n == 0) throw std::invalid_argument("theorem_main_arrangement: n must be positive");
  const std::size_t count = labels.size();
  const std::uint64_t d = stern(n);
  auto image = [&](std::size_t i) -> const Seq& { return labels[i % count] == Label::A ? a : b; };
  Seq out;
  if (d % 2 == 0) {
    const std::size_t start = (d / 2) % count;
    for (std::size_t k = 0; k < count; ++k) append(out, image(start + k));
    return out;
  }
  const std::size_t c = ((d + 1) / 2 - 1) % count;  // zero-based Λ_c
  append(out, half_ceil(image(c)));
  for (std::size_t k = 1; k < count; ++k) append(out, image(c + k));
  append(out, half_floor(image(c)));
  return out;
}

inline Seq theorem_main_arrangement(const Seq& a, const Seq& b, Index n) {
  auto labels = label_sequences();
  return theorem_main_arrangement(labels.at(n), a, b, n);
}

/// Random word of length in [1, max_length] over letters [1, max_letter].
template <class Rng>
Seq random_word(Rng& rng, unsigned max_length, unsigned max_letter) {
  if (max_length == 0 || max_letter == 0) throw std::invalid_argument("random_word: bounds must be positive");
  std::uniform_int_distribution<unsigned> length_dist(1, max_length);
  std::uniform_int_distribution<unsigned> letter_dist(1, max_letter);
  Seq out(length_dist(rng));
  for (auto& x : out) x = letter_dist(rng);
  return out;
}

/// Random palindrome: a random half mirrored around an optional middle
/// letter. Length uniform in [1, max_length], letters uniform in [1, max_letter].
template <class Rng>
Seq random_palindrome(Rng& rng, unsigned max_length, unsigned max_letter) {
  if (max_length == 0 || max_letter == 0) throw std::invalid_argument("random_palindrome: bounds must be positive");
  std::uniform_int_distribution<unsigned> length_dist(1, max_length);
  std::uniform_int_distribution<unsigned> letter_dist(1, max_letter);
  const unsigned length = length_dist(rng);
  Seq half;
  for (unsigned i = 0; i < length / 2; ++i) half.emplace_back(letter_dist(rng));
  Seq out = half;
  if (length % 2 == 1) out.emplace_back(letter_dist(rng));
  append(out, reverse(half));
  return out;
}

inline VerificationReport verify_theorem_main(const LabelWord& labels, const Seq& a, const Seq& b, Index n) {
  const Seq arranged = theorem_main_arrangement(labels, a, b, n);
  const std::uint64_t d = stern(n);
  std::string witness = "d_n=" + std::to_string(d) + (d % 2 == 0 ? " start=" : " split=") +
                        std::to_string(d % 2 == 0 ? d / 2 + 1 : (d + 1) / 2) + " blocks=" + to_string(labels);
  const bool pass = is_palindrome(arranged);
  return detail::make_report("theorem-main", n, pass, std::move(witness),
                             [&] { return "A=" + format_seq(a) + " B=" + format_seq(b) + " arranged=" + format_seq(arranged); });
}

inline VerificationReport verify_theorem_main(const Seq& a, const Seq& b, Index n) {
  auto labels = label_sequences();
  return verify_theorem_main(labels.at(n), a, b, n);
}

// ---------------------------------------------------------------------------
// Lengths

/// |S(n)| when |A| = |B| = 2.
inline std::uint64_t length_of_s(Index n) { return n == 0 ? 2 : 2 * stern(2 * n - 1); }

/// |S(n)| for arbitrary seed lengths, from block counts.
inline std::uint64_t length_of_s(Index n, std::uint64_t a_len, std::uint64_t b_len) {
  auto labels = label_sequences();
  const auto [ca, cb] = labels.block_counts(n);
  return ca * a_len + cb * b_len;
}

// ---------------------------------------------------------------------------
// Alternate factorisations

/// S(k) = S(prefix_index) ⊕ S(base_index)^power.
struct PrefixPowerFactorization {
  Index prefix_index = 0;
  Index base_index = 0;
  std::uint64_t power = 0;

  bool operator==(const PrefixPowerFactorization&) const = default;
};

/// S(k) = S(base_index)^power ⊕ S(suffix_index).
struct PowerSuffixFactorization {
  Index base_index = 0;
  std::uint64_t power = 0;
  Index suffix_index = 0;

  bool operator==(const PowerSuffixFactorization&) const = default;
};

/// Even k > 2: halve k = k_1 until k_i is odd, k_{i+1} = (k_i+1)/2, then
/// S(k) = S(a*(k_{i+1}-1)) ⊕ S(k_{i+1})^i. Powers of two reduce to
/// S(2^m) = S(2) ⊕ S(1)^{m-1}.
inline PrefixPowerFactorization lemma4_factorization(Index k) {
  if (k <= 2 || k % 2 != 0) throw std::invalid_argument("lemma4_factorization: k must be even and > 2");
  std::uint64_t i = 1;
  Index ki = k;
  while (ki % 2 == 0) {
    ki /= 2;
    ++i;
  }
  if (ki == 1) return {2, 1, i - 2};
  const Index next = (ki + 1) / 2;
  return {a_star(next - 1), next, i};
}

/// Odd k > 2: k_j = (k_{j-1}+1)/2 until k_i is even, k_{i+1} = k_i/2, then
/// S(k) = S(k_{i+1})^i ⊕ S(a(k_{i+1})) if k_i > 2, else S(0)^i ⊕ S(1).
inline PowerSuffixFactorization lemma5_factorization(Index k) {
  if (k <= 2 || k % 2 == 0) throw std::invalid_argument("lemma5_factorization: k must be odd and > 2");
  std::uint64_t i = 1;
  Index ki = k;
  while (ki % 2 == 1) {
    ki = (ki + 1) / 2;
    ++i;
  }
  if (ki == 2) return {0, i, 1};
  return {ki / 2, i, a_of(ki / 2)};
}

/// Last index k_{i+1} of the odd chain k → (k+1)/2 → … → k_i even, k_i/2.
inline std::pair<Index, std::uint64_t> odd_chain_end(Index k) {
  std::uint64_t i = 1;
  while (k % 2 == 1) {
    k = (k + 1) / 2;
    ++i;
  }
  return {k / 2, i};
}

// ---------------------------------------------------------------------------
// Mirror symmetry S_{A,B}(k) = reverse(S_{B,A}(m))

/// m = 6·2^{n-2} − i + 1 when k = 6·2^{n-2} + i with n >= 2, 1 <= i <= 2^{n-1}.
inline std::optional<Index> mirror_index(Index k) {
  for (unsigned n = 2; n < 62; ++n) {
    const Index base = Index{3} << (n - 1);
    const Index width = Index{1} << (n - 1);
    if (k <= base) return std::nullopt;
    if (k - base <= width) return base - (k - base) + 1;
  }
  return std::nullopt;
}

template <class T>
VerificationReport verify_mirror(const Word<T>& a, const Word<T>& b, Index k) {
  const auto m = mirror_index(k);
  if (!m) throw std::invalid_argument("verify_mirror: no mirror index for k=" + std::to_string(k));
  const Word<T> direct = s_rec(a, b, k);
  const Word<T> mirrored = reverse(s_rec(b, a, *m));
  return detail::make_report("mirror", k, direct == mirrored, "m=" + std::to_string(*m),
                             [&] { return format_seq(direct) + " vs " + format_seq(mirrored); });
}

// ---------------------------------------------------------------------------
// Block exponent profile S(n) = A^{α_1} B^{β_1} … A^{α_m} B^{β_m}

struct BlockRun {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  bool operator==(const BlockRun&) const = default;
};

inline std::vector<BlockRun> block_exponent_profile(const LabelWord& labels) {
  std::vector<BlockRun> runs;
  std::size_t i = 0;
  while (i < labels.size()) {
    BlockRun run;
    while (i < labels.size() && labels[i] == Label::A) {
      ++run.alpha;
      ++i;
    }
    while (i < labels.size() && labels[i] == Label::B) {
      ++run.beta;
      ++i;
    }
    runs.push_back(run);
  }
  return runs;
}

inline std::vector<BlockRun> block_exponent_profile(Index n) {
  auto labels = label_sequences();
  return block_exponent_profile(labels.at(n));
}

/// Either every nonempty A-run or every nonempty B-run has length one.
inline bool has_single_run_side(const std::vector<BlockRun>& runs) {
  bool alphas_one = true;
  bool betas_one = true;
  for (const auto& r : runs) {
    alphas_one = alphas_one && r.alpha <= 1;
    betas_one = betas_one && r.beta <= 1;
  }
  return alphas_one || betas_one;
}

// ---------------------------------------------------------------------------
// Batch drivers

/// s_graph = s_rec at every index of levels 1..levels (n <= 2^{levels}),
/// also checking center = left ⊕ right on every enumerated vertex.
template <class T, class Sink>
void verify_equivalence(const Word<T>& a, const Word<T>& b, unsigned levels, Sink&& sink,
                        AStarRule rule = AStarRule::corrected) {
  OrderedSequences<T> family(a, b, rule);
  const Word<T> base[3] = {a, b, concat(a, b)};
  for (Index n = 0; n < 3; ++n) {
    sink(detail::make_report("equivalence", n, family.at(n) == base[n], "base case",
                             [&] { return format_seq(family.at(n)); }));
  }
  for (unsigned m = 2; m <= levels; ++m) {
    const auto vertices = level(a, b, m);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Index n = (Index{1} << (m - 1)) + i + 1;
      const auto& v = vertices[i];
      const bool split_ok = v.center == concat(v.left, v.right);
      const Word<T>& rec = family.at(n);
      const bool pass = split_ok && rec == v.center;
      sink(detail::make_report(
          "equivalence", n, pass, "level=" + std::to_string(m) + " position=" + std::to_string(i + 1),
          [&] { return "graph=" + format_seq(v.center) + " recursive=" + format_seq(rec); }));
    }
  }
}

struct LemmaRanges {
  Index lemma12_k_max = 100000;
  Index lemma3_k_max = Index{1} << 14;
  Index factorization_k_max = Index{1} << 12;  // lemmas 4-6, mirror, block structure
  unsigned level_n_max = 14;                   // index identities, lem-new
  unsigned row_n_max = 16;                     // diatomic row symmetry
};

/// Runs every supporting identity over `ranges`. Lengths refer to seeds of
/// length 2 and come from block counts, independent of the diatomic values
/// they are compared with.
template <class Sink>
void verify_lemmas(const LemmaRanges& ranges, Sink&& sink) {
  auto labels = label_sequences();
  auto len = [&](Index n) { return 2 * labels.length(n); };

  for (Index k = 2; k <= ranges.lemma12_k_max; ++k) {
    const auto lhs = len(k);
    const auto rhs = len(a_of(k)) + len(a_of(k - 1));
    sink(detail::make_report("lemma1", k, lhs == rhs, "|S(k)|=" + std::to_string(lhs),
                             [&] { return "|S(a(k))|+|S(a(k-1))|=" + std::to_string(rhs); }));
  }
  for (Index k = 1; k <= ranges.lemma12_k_max; ++k) {
    const auto lhs = len(a_of(k));
    sink(detail::make_report("lemma2", k, lhs == 2 * stern(k), "|S(a(k))|=" + std::to_string(lhs),
                             [&] { return "2*d_k=" + std::to_string(2 * stern(k)); }));
  }
  for (Index k = 3; k <= ranges.lemma3_k_max; k += 2) {
    const auto [last, steps] = odd_chain_end(k);
    const auto half = len(last) / 2;
    sink(detail::make_report("lemma3", k, half == stern(k - 1),
                             "k_{i+1}=" + std::to_string(last) + " |S|/2=" + std::to_string(half),
                             [&] { return "d_{k-1}=" + std::to_string(stern(k - 1)); }));
  }
  for (Index k = 3; k <= ranges.factorization_k_max; ++k) {
    LabelWord built;
    std::string witness;
    if (k % 2 == 0) {
      const auto f = lemma4_factorization(k);
      built = labels.at(f.prefix_index);
      for (std::uint64_t p = 0; p < f.power; ++p) append(built, labels.at(f.base_index));
      witness = "S(" + std::to_string(f.prefix_index) + ")+S(" + std::to_string(f.base_index) + ")^" +
                std::to_string(f.power);
    } else {
      const auto f = lemma5_factorization(k);
      for (std::uint64_t p = 0; p < f.power; ++p) append(built, labels.at(f.base_index));
      append(built, labels.at(f.suffix_index));
      witness = "S(" + std::to_string(f.base_index) + ")^" + std::to_string(f.power) + "+S(" +
                std::to_string(f.suffix_index) + ")";
    }
    const LabelWord& direct = labels.at(k);
    sink(detail::make_report(k % 2 == 0 ? "lemma4" : "lemma5", k, built == direct, std::move(witness),
                             [&] { return to_string(built) + " vs " + to_string(direct); }));
  }
  for (Index k = 3; k <= ranges.factorization_k_max; ++k) {
    if (k % 2 == 0) {
      Index ki = k;
      std::uint64_t i = 1;
      while (ki % 2 == 0) {
        ki /= 2;
        ++i;
      }
      if (ki == 1) continue;  // powers of two have no odd chain end
      const Index next = (ki + 1) / 2;
      const std::uint64_t left_len = len(a_of(next - 1));
      // R = d_{k_2} + (N + (i-1)M)/2 with N = |S(a(k_{i+1}-1))|, M = |S(k_{i+1})|
      const std::uint64_t r = stern(k / 2) + (left_len + (i - 1) * len(next)) / 2;
      sink(detail::make_report("lemma6", k, r > left_len,
                               "case=i R=" + std::to_string(r) + " N=" + std::to_string(left_len)));
    } else {
      const auto [last, j] = odd_chain_end(k);
      const std::uint64_t l = stern((k + 1) / 2);
      const std::uint64_t bound = (j - 1) * len(last);
      sink(detail::make_report("lemma6", k, l < bound,
                               "case=ii L=" + std::to_string(l) + " bound=" + std::to_string(bound)));
    }
  }
  for (unsigned n = 2; n <= ranges.level_n_max; ++n) {
    const Index half = Index{1} << (n - 2);
    const Index full = Index{1} << (n - 1);
    for (Index m = 3; m <= full; ++m) {
      bool pass;
      std::string witness;
      if (m % 2 == 0) {
        const Index k = m / 2;
        pass = a_of(half + k) == a_of(full + m) && 2 * (half + k) == full + m;
        witness = "even m=" + std::to_string(m);
      } else {
        const Index k = (m + 1) / 2;
        pass = a_star(half + k - 1) == a_star(full + m - 1) && half + k == a_of(full + m);
        witness = "odd m=" + std::to_string(m);
      }
      sink(detail::make_report("index-identities", full + m, pass, std::move(witness)));
    }
  }
  for (unsigned n = 2; n <= ranges.level_n_max; ++n) {
    const Index center = Index{3} << (n - 1);
    for (Index i = 1; i <= (Index{1} << (n - 1)); ++i) {
      const Index k1 = center + i - 1;
      const Index k2 = center - i + 1;
      const std::uint64_t via_stern = stern(2 * (k1 + 1) - 1) - stern(k1 + 1);
      const std::uint64_t via_length = len(k1 + 1) / 2 - stern(k1 + 1);
      const bool pass = via_stern == stern(k2) && via_length == stern(k2);
      sink(detail::make_report("lem-new", k1 + 1, pass, "k''=" + std::to_string(k2),
                               [&] { return "stern-form=" + std::to_string(via_stern) +
                                            " length-form=" + std::to_string(via_length) +
                                            " d_k''=" + std::to_string(stern(k2)); }));
    }
  }
  for (unsigned n = 0; n <= ranges.row_n_max; ++n) {
    const auto row = stern_row(n);
    const bool pass = std::equal(row.begin(), row.end(), row.rbegin());
    sink(detail::make_report("row-symmetry", n, pass, "row length=" + std::to_string(row.size())));
  }
  for (Index k = 3; k <= ranges.factorization_k_max; ++k) {
    const auto m = mirror_index(k);
    if (!m) continue;
    LabelWord swapped = labels.at(*m);
    for (auto& l : swapped) l = l == Label::A ? Label::B : Label::A;
    const bool pass = labels.at(k) == reverse(swapped);
    sink(detail::make_report("mirror", k, pass, "m=" + std::to_string(*m)));
  }
  for (Index n = 1; n <= ranges.factorization_k_max; ++n) {
    const auto runs = block_exponent_profile(labels.at(n));
    sink(detail::make_report("block-structure", n, has_single_run_side(runs),
                             "runs=" + std::to_string(runs.size()),
                             [&] { return to_string(labels.at(n)); }));
  }
}

}  // namespace markovseq
