#include "rainbowlab/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) / i is exact; divide out the common factor first.
    const auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, den);
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i) / (den / g);
    if (__builtin_mul_overflow(result / g, factor, &result)) throw InputError("binomial coefficient overflows 64 bits");
  }
  return result;
}

bool next_combination(std::vector<Index>& comb, Index n) {
  const auto k = static_cast<Index>(comb.size());
  Index i = k - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<IndexSet> combinations(Index n, Index k) {
  std::vector<IndexSet> out;
  for_each_combination(n, k, [&](std::span<const Index> c) {
    out.emplace_back(c.begin(), c.end());
    return true;
  });
  return out;
}

IndexSet select(std::span<const Index> base, std::span<const Index> positions) {
  IndexSet out;
  out.reserve(positions.size());
  for (Index p : positions) out.push_back(base[static_cast<std::size_t>(p)]);
  return out;
}

IndexSet merge_sorted(std::span<const Index> a, std::span<const Index> b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool strictly_increasing(std::span<const Index> values) {
  return std::adjacent_find(values.begin(), values.end(), [](Index x, Index y) { return x >= y; }) == values.end();
}

bool lex_less(std::span<const Index> a, std::span<const Index> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InputError("factorial argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace rainbowlab
