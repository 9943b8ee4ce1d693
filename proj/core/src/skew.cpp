#include "rainbowlab/skew.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
  for (char ch : bits_) {
    if (ch != '0' && ch != '1') throw InputError("binary word may contain only 0 and 1: '" + bits_ + "'");
  }
}

int delta(const BinaryWord& x, const BinaryWord& y) {
  if (x.length() != y.length()) throw InputError("delta of words with different lengths");
  const auto& a = x.str();
  const auto& b = y.str();
  const auto mismatch = std::mismatch(a.begin(), a.end(), b.begin());
  if (mismatch.first == a.end()) throw InputError("delta of equal words");
  return static_cast<int>(mismatch.first - a.begin());
}

namespace {

void require_sorted_distinct(std::span<const BinaryWord> u) {
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i - 1] == u[i]) throw InputError("duplicate word in tuple");
    if (!(u[i - 1] < u[i])) throw InputError("tuple must be sorted lexicographically");
  }
}

std::vector<int> gaps(std::span<const BinaryWord> u) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) out.push_back(delta(u[i], u[i + 1]));
  return out;
}

}  // namespace

bool is_skew_tuple(std::span<const BinaryWord> u) {
  require_sorted_distinct(u);
  auto g = gaps(u);
  std::sort(g.begin(), g.end());
  return std::adjacent_find(g.begin(), g.end()) == g.end();
}

bool OrderType::less(int i, int j) const {
  const auto pi = std::find(ascending.begin(), ascending.end(), i);
  const auto pj = std::find(ascending.begin(), ascending.end(), j);
  if (pi == ascending.end() || pj == ascending.end()) throw InputError("gap index outside the order");
  return pi < pj;
}

OrderType f_star(std::span<const BinaryWord> u) {
  if (!is_skew_tuple(u)) throw InputError("f_* is defined only on skew tuples");
  const auto g = gaps(u);
  OrderType t;
  t.ascending.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) t.ascending[i] = static_cast<int>(i);
  std::sort(t.ascending.begin(), t.ascending.end(),
            [&](int i, int j) { return g[static_cast<std::size_t>(i)] < g[static_cast<std::size_t>(j)]; });
  return t;
}

bool has_unique_meets(std::span<const BinaryWord> words) {
  std::vector<std::string> node_at_level;  // prefix of the meet node at each level
  std::vector<bool> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const int lvl = delta(words[i], words[j]);
      const std::string prefix = words[i].str().substr(0, static_cast<std::size_t>(lvl));
      if (static_cast<std::size_t>(lvl) >= seen.size()) {
        seen.resize(static_cast<std::size_t>(lvl) + 1, false);
        node_at_level.resize(static_cast<std::size_t>(lvl) + 1);
      }
      if (!seen[static_cast<std::size_t>(lvl)]) {
        seen[static_cast<std::size_t>(lvl)] = true;
        node_at_level[static_cast<std::size_t>(lvl)] = prefix;
      } else if (node_at_level[static_cast<std::size_t>(lvl)] != prefix) {
        return false;
      }
    }
  }
  return true;
}

SkewSet::SkewSet(std::vector<BinaryWord> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].length() != words_.front().length()) throw InputError("skew set words must share one length");
    if (i > 0 && words_[i] == words_[i - 1]) throw InputError("duplicate word in skew set");
  }
  if (!has_unique_meets(words_)) throw InputError("words violate meet-uniqueness");
}

std::vector<BinaryWord> SkewSet::gather(std::span<const Index> indices) const {
  std::vector<BinaryWord> out;
  for (Index i : indices) {
    if (i < 0 || i >= size()) throw InputError("word index out of range");
    out.push_back(words_[static_cast<std::size_t>(i)]);
  }
  return out;
}

SkewSet SkewSet::subset(std::span<const Index> indices) const { return SkewSet(gather(indices)); }

SkewSet build_skew_set(int m) {
  if (m < 1) throw InputError("skew set height must be >= 1");
  if (m > 20) throw InputError("skew set height too large");
  const int internal = (1 << m) - 1;
  // Internal node numbered v (breadth-first, root 0) splits at level v; its
  // children are 2v+1 and 2v+2, which always lie deeper than v.
  std::vector<BinaryWord> words;
  for (int leaf = 0; leaf < (1 << m); ++leaf) {
    std::string bits(static_cast<std::size_t>(internal), '0');
    int node = 0;
    for (int depth = m - 1; depth >= 0; --depth) {
      const int dir = (leaf >> depth) & 1;
      bits[static_cast<std::size_t>(node)] = dir ? '1' : '0';
      node = 2 * node + 1 + dir;
    }
    words.emplace_back(bits);
  }
  return SkewSet(std::move(words));
}

bool is_perfect_of_height(std::span<const BinaryWord> sorted_words, int m) {
  if (m < 0) return false;
  if (sorted_words.size() != (std::size_t{1} << m)) return false;
  if (m == 0) return true;
  // The root split is the shallowest meet; for a perfect tree it cuts the set in half.
  const std::size_t half = sorted_words.size() / 2;
  int root = delta(sorted_words.front(), sorted_words.back());
  if (delta(sorted_words[half - 1], sorted_words[half]) != root) return false;
  return is_perfect_of_height(sorted_words.subspan(0, half), m - 1) &&
         is_perfect_of_height(sorted_words.subspan(half), m - 1);
}

CanonicityCheck check_fstar_canonical(const SkewSet& C, const Coloring& f) {
  if (f.n() != C.size()) throw InputError("coloring must cover the a-subsets of C");
  if (f.r() < 2) throw InputError("canonicity needs arity >= 2");
  CanonicityCheck result;
  std::map<OrderType, std::pair<Color, IndexSet>> first;
  for_each_combination(C.size(), f.r(), [&](std::span<const Index> s) {
    const auto words = C.gather(s);
    OrderType t = f_star(words);
    const Color col = f.at(s);
    auto it = first.find(t);
    if (it == first.end()) {
      first.emplace(std::move(t), std::make_pair(col, IndexSet(s.begin(), s.end())));
    } else if (it->second.first != col) {
      result.canonical = false;
      result.counterexample.emplace(it->second.second, IndexSet(s.begin(), s.end()));
      return false;
    }
    return true;
  });
  if (result.canonical) {
    for (const auto& [t, entry] : first) result.table.emplace(t, entry.first);
  }
  return result;
}

SkewSearchResult find_canonical_skew_subset(const SkewSet& C, const Coloring& f, int m,
                                            std::uint64_t max_candidates) {
  if (f.n() != C.size()) throw InputError("coloring must cover the a-subsets of C");
  if (m < 0) throw InputError("height must be >= 0");
  SkewSearchResult result;
  if (m >= 31 || (std::int64_t{1} << m) > C.size()) return result;
  const int size = 1 << m;
  const int a = f.r();
  for_each_combination(C.size(), size, [&](std::span<const Index> s) {
    if (++result.candidates > max_candidates)
      throw BudgetExceeded("skew subset search budget exceeded", result.candidates, max_candidates);
    const auto words = C.gather(s);
    if (!is_perfect_of_height(words, m)) return true;
    // Restrict f to the candidate and test canonicity there.
    bool canonical = true;
    std::map<OrderType, Color> table;
    if (size >= a) {
      canonical = for_each_combination(size, a, [&](std::span<const Index> pos) {
        const IndexSet global = select(s, pos);
        const Color col = f.at(global);
        auto [it, inserted] = table.emplace(f_star(C.gather(global)), col);
        return inserted || it->second == col;
      });
    }
    if (canonical) result.subset = IndexSet(s.begin(), s.end());
    return !canonical;
  });
  return result;
}

}  // namespace rainbowlab
