#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/combinatorics.hpp"

namespace rainbowlab {

/// A finite 0/1 word; the ambient order is lexicographic.
class BinaryWord {
 public:
  BinaryWord() = default;
  /// Accepts only '0' and '1'.
  explicit BinaryWord(std::string_view bits);

  int length() const noexcept { return static_cast<int>(bits_.size()); }
  int bit(int i) const { return bits_[static_cast<std::size_t>(i)] == '1' ? 1 : 0; }
  const std::string& str() const noexcept { return bits_; }

  auto operator<=>(const BinaryWord&) const = default;

 private:
  std::string bits_;
};

/// Least index where x and y differ: the level of their meet. Throws for equal
/// words or different lengths.
int delta(const BinaryWord& x, const BinaryWord& y);

/// Sorted distinct words whose consecutive meets sit at pairwise distinct levels.
bool is_skew_tuple(std::span<const BinaryWord> u);

/// Linear order on the gaps {0..a-2} of a skew tuple; `ascending` lists the gap
/// indices in increasing order of their meet level.
struct OrderType {
  std::vector<int> ascending;

  bool less(int i, int j) const;
  auto operator<=>(const OrderType&) const = default;
};

OrderType f_star(std::span<const BinaryWord> u);

/// Equal-length sorted words in which equal meet levels force equal meet nodes.
class SkewSet {
 public:
  /// Sorts the words; throws InputError on mixed lengths, duplicates, or a
  /// meet-uniqueness violation.
  explicit SkewSet(std::vector<BinaryWord> words);

  int size() const noexcept { return static_cast<int>(words_.size()); }
  int word_length() const noexcept { return words_.empty() ? 0 : words_.front().length(); }
  const std::vector<BinaryWord>& words() const noexcept { return words_; }
  const BinaryWord& operator[](Index i) const { return words_[static_cast<std::size_t>(i)]; }

  std::vector<BinaryWord> gather(std::span<const Index> indices) const;
  SkewSet subset(std::span<const Index> indices) const;

 private:
  std::vector<BinaryWord> words_;
};

/// Meet-uniqueness for an arbitrary word family (sorted or not).
bool has_unique_meets(std::span<const BinaryWord> words);

/// Leaves of a full binary tree of height m whose 2^m - 1 splitting nodes sit at
/// distinct levels (breadth-first numbering). Words have length 2^m - 1.
SkewSet build_skew_set(int m);

/// True iff the words are the leaves of a full binary meet tree of height m
/// (every split divides the set into equal halves, recursively).
bool is_perfect_of_height(std::span<const BinaryWord> sorted_words, int m);

struct CanonicityCheck {
  bool canonical = true;
  std::map<OrderType, Color> table;  // f_* value -> color, filled on success
  std::optional<std::pair<IndexSet, IndexSet>> counterexample;
};

/// f is a coloring of the a-subsets of C (indices into C's sorted words, a = f.r()).
/// Canonical iff f(u) depends only on f_*(u).
CanonicityCheck check_fstar_canonical(const SkewSet& C, const Coloring& f);

struct SkewSearchResult {
  std::optional<IndexSet> subset;  // indices into C
  std::uint64_t candidates = 0;
};

/// Lexicographically first perfect height-m subset of C on which f is
/// f_*-canonical. Candidates beyond `max_candidates` throw BudgetExceeded.
SkewSearchResult find_canonical_skew_subset(const SkewSet& C, const Coloring& f, int m,
                                            std::uint64_t max_candidates = 5'000'000);

}  // namespace rainbowlab
