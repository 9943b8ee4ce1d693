#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rainbowlab {

using Index = int;
using IndexSet = std::vector<Index>;

/// C(n, k); throws InputError on overflow of 64 bits. Zero when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Advances `comb` (strictly increasing, values in [0, n)) to the next k-subset in
/// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Index>& comb, Index n);

/// Calls fn(span) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early when fn returns false; returns false iff stopped early.
template <typename Fn>
bool for_each_combination(Index n, Index k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<Index> comb(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  do {
    if (!fn(std::span<const Index>(comb))) return false;
  } while (next_combination(comb, n));
  return true;
}

/// All k-subsets of {0..n-1}, lexicographic.
std::vector<IndexSet> combinations(Index n, Index k);

/// Picks elements of `base` at the given positions.
IndexSet select(std::span<const Index> base, std::span<const Index> positions);

/// Sorted union of two disjoint sorted sets.
IndexSet merge_sorted(std::span<const Index> a, std::span<const Index> b);

/// True iff values are strictly increasing.
bool strictly_increasing(std::span<const Index> values);

/// Lexicographic comparison of sorted index sets; shorter-prefix first.
bool lex_less(std::span<const Index> a, std::span<const Index> b);

std::uint64_t factorial(int n);

}  // namespace rainbowlab
