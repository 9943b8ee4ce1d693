#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "rainbowlab/error.hpp"
#include "rainbowlab/rainbow.hpp"

namespace rainbowlab {

std::string_view to_string(SearchMethod method) { return method == SearchMethod::Exact ? "exact" : "greedy"; }

SearchMethod parse_search_method(std::string_view text) {
  if (text == "exact") return SearchMethod::Exact;
  if (text == "greedy") return SearchMethod::Greedy;
  throw InputError("unknown search method '" + std::string(text) + "'");
}

namespace {

std::uint64_t mask_of(std::span<const Index> s) {
  std::uint64_t m = 0;
  for (Index i : s) m |= std::uint64_t{1} << i;
  return m;
}

void add_arity_conflicts(const PointSet& X, int a, bool forbid_zero, std::vector<std::uint64_t>& out) {
  std::map<Rational, std::vector<std::uint64_t>> groups;
  for_each_combination(X.size(), a, [&](std::span<const Index> s) {
    SquaredVolume v = squared_volume(X, s);
    if (v.is_zero()) {
      if (forbid_zero) out.push_back(mask_of(s));
    } else {
      groups[std::move(v.value)].push_back(mask_of(s));
    }
    return true;
  });
  for (const auto& [vol, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) out.push_back(members[i] | members[j]);
    }
  }
}

int top_bit(std::uint64_t m) { return 63 - std::countl_zero(m); }

class ConflictIndex {
 public:
  explicit ConflictIndex(const ConflictHypergraph& h) : by_top_(static_cast<std::size_t>(h.n)) {
    for (std::uint64_t b : h.bad_sets) by_top_[static_cast<std::size_t>(top_bit(b))].push_back(b);
  }

  // Elements below v are all decided; only sets topped by v can close.
  bool can_add(std::uint64_t chosen, Index v) const {
    const std::uint64_t with = chosen | (std::uint64_t{1} << v);
    for (std::uint64_t b : by_top_[static_cast<std::size_t>(v)]) {
      if ((b & ~with) == 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<std::uint64_t>> by_top_;
};

struct BranchAndBound {
  const ConflictIndex& conflicts;
  int n;
  NodeBudget& budget;
  int best_size = -1;
  std::uint64_t best = 0;

  void run(Index v, std::uint64_t chosen, int size) {
    budget.tick();
    if (size + (n - v) <= best_size) return;
    if (v == n) {
      best_size = size;
      best = chosen;
      return;
    }
    if (conflicts.can_add(chosen, v)) run(v + 1, chosen | (std::uint64_t{1} << v), size + 1);
    run(v + 1, chosen, size);
  }
};

IndexSet members(std::uint64_t m) {
  IndexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

RainbowVerdict verdict_for_subset(const PointSet& X, const IndexSet& s, int a, RainbowMode mode) {
  const int k = static_cast<int>(s.size());
  if (k >= a) return check_rainbow(X.subset(s), a, mode);
  // Fewer than a points: PLAIN/STRONG hold vacuously, STRICT still constrains smaller arities.
  if (mode == RainbowMode::Strict && k >= 2) return check_rainbow(X.subset(s), k, mode);
  return {};
}

}  // namespace

ConflictHypergraph build_conflicts(const PointSet& X, int a, RainbowMode mode) {
  if (X.size() > 64) throw InputError("conflict hypergraph supports at most 64 points");
  if (a < 2 || a > X.size()) throw InputError("arity out of range");
  if (mode == RainbowMode::Strict && a > X.dim() + 1) throw InputError("strict arity exceeds d+1");
  ConflictHypergraph h;
  h.n = X.size();
  switch (mode) {
    case RainbowMode::Plain:
      add_arity_conflicts(X, a, false, h.bad_sets);
      break;
    case RainbowMode::Strong:
      add_arity_conflicts(X, a, true, h.bad_sets);
      break;
    case RainbowMode::Strict:
      for (int ap = 2; ap <= a; ++ap) add_arity_conflicts(X, ap, true, h.bad_sets);
      // Off-hyperplane: any a+1 affinely independent points.
      if (a + 1 <= X.size()) {
        for_each_combination(X.size(), a + 1, [&](std::span<const Index> s) {
          if (!is_degenerate(X, s)) h.bad_sets.push_back(mask_of(s));
          return true;
        });
      }
      break;
  }
  std::sort(h.bad_sets.begin(), h.bad_sets.end());
  h.bad_sets.erase(std::unique(h.bad_sets.begin(), h.bad_sets.end()), h.bad_sets.end());
  return h;
}

RainbowSubsetResult max_rainbow_subset(const PointSet& X, int a, RainbowMode mode, SearchMethod method,
                                       const RainbowSearchBudget& budget) {
  if (X.empty()) throw InputError("rainbow search on an empty point set");
  if (a < 2 || a > X.size()) throw InputError("arity out of range");
  if (method == SearchMethod::Exact && X.size() > budget.max_points)
    throw BudgetExceeded("exact rainbow search point budget exceeded", static_cast<std::uint64_t>(X.size()),
                         static_cast<std::uint64_t>(budget.max_points));

  const ConflictHypergraph h = build_conflicts(X, a, mode);
  const ConflictIndex index(h);
  RainbowSubsetResult result;

  if (method == SearchMethod::Greedy) {
    std::uint64_t chosen = 0;
    for (Index v = 0; v < X.size(); ++v) {
      ++result.nodes;
      if (index.can_add(chosen, v)) chosen |= std::uint64_t{1} << v;
    }
    result.subset = members(chosen);
  } else {
    NodeBudget nodes(budget.max_nodes, "exact rainbow search node budget exceeded");
    BranchAndBound bb{index, X.size(), nodes};
    bb.run(0, 0, 0);
    result.subset = members(bb.best);
    result.nodes = nodes.used();
  }
  result.verdict = verdict_for_subset(X, result.subset, a, mode);
  return result;
}

}  // namespace rainbowlab
