#include "rainbowlab/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>

namespace rainbowlab {

std::string_view to_string(HomogMethod method) {
  return method == HomogMethod::Exhaustive ? "exhaustive" : "stepwise";
}

HomogMethod parse_homog_method(std::string_view text) {
  if (text == "exhaustive") return HomogMethod::Exhaustive;
  if (text == "stepwise") return HomogMethod::Stepwise;
  throw InputError("unknown homogeneous-set method '" + std::string(text) + "'");
}

namespace {

IndexSet iota_set(int n) {
  IndexSet s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

IndexSet checked_pool(const Coloring& g, std::span<const Index> pool) {
  if (pool.empty()) return iota_set(g.n());
  if (!strictly_increasing(pool) || pool.front() < 0 || pool.back() >= g.n())
    throw InputError("candidate pool must be sorted indices within the coloring");
  return IndexSet(pool.begin(), pool.end());
}

using Accept = std::function<bool(const IndexSet&)>;

// Lexicographically first m-subset of `pool` on which g is constant and which
// `accept` approves. Extends a partial set only while every closed r-subset
// keeps the target color.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Coloring& g, const IndexSet& pool, int m, NodeBudget& budget, const Accept& accept)
      : g_(g), pool_(pool), m_(m), budget_(budget), accept_(accept) {}

  std::optional<IndexSet> run() {
    chosen_.clear();
    if (extend(0, std::nullopt)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t from, std::optional<Color> target) {
    if (static_cast<int>(chosen_.size()) == m_) return !accept_ || accept_(chosen_);
    const std::size_t need = static_cast<std::size_t>(m_) - chosen_.size();
    for (std::size_t i = from; i + need <= pool_.size(); ++i) {
      budget_.tick();
      const Index v = pool_[i];
      std::optional<Color> t = target;
      if (closes_consistently(v, t)) {
        chosen_.push_back(v);
        if (extend(i + 1, t)) return true;
        chosen_.pop_back();
      }
    }
    return false;
  }

  bool closes_consistently(Index v, std::optional<Color>& target) const {
    const int r = g_.r();
    const int k = static_cast<int>(chosen_.size());
    if (k < r - 1) return true;
    IndexSet sub(static_cast<std::size_t>(r));
    return for_each_combination(k, r - 1, [&](std::span<const Index> pos) {
      for (std::size_t j = 0; j < pos.size(); ++j) sub[j] = chosen_[static_cast<std::size_t>(pos[j])];
      sub[static_cast<std::size_t>(r - 1)] = v;
      const Color col = g_.at_rank(g_.rank(sub));
      if (!target) target = col;
      return col == *target;
    });
  }

  const Coloring& g_;
  const IndexSet& pool_;
  int m_;
  NodeBudget& budget_;
  const Accept& accept_;
  IndexSet chosen_;
};

using ColorFn = std::function<Color(const IndexSet&)>;

// Largest class of `items` under color(x), ties to the smallest color.
IndexSet majority(const IndexSet& items, const std::function<Color(Index)>& color) {
  std::map<Color, IndexSet> buckets;
  for (Index x : items) buckets[color(x)].push_back(x);
  const IndexSet* best = nullptr;
  for (const auto& [col, members] : buckets) {
    if (!best || members.size() > best->size()) best = &members;
  }
  return best ? *best : IndexSet{};
}

// End-homogeneous sequence, then recursion on the induced (r-1)-coloring.
IndexSet ramify(const ColorFn& h, int r, const IndexSet& items, NodeBudget& budget) {
  if (r == 1) return majority(items, [&](Index x) { return h(IndexSet{x}); });

  IndexSet seq;
  IndexSet pool = items;
  while (!pool.empty()) {
    const Index x = pool.front();
    pool.erase(pool.begin());
    seq.push_back(x);
    const int k = static_cast<int>(seq.size());
    if (k < r - 1) continue;
    // (r-1)-subsets of seq that contain x, i.e. x plus (r-2) earlier elements.
    for_each_combination(k - 1, r - 2, [&](std::span<const Index> pos) {
      IndexSet s = select(seq, pos);
      s.push_back(x);
      budget.tick(pool.size() + 1);
      pool = majority(pool, [&](Index y) {
        IndexSet t = s;
        t.push_back(y);
        return h(t);
      });
      return !pool.empty();
    });
  }
  if (static_cast<int>(seq.size()) < r) return seq;

  const Index last = seq.back();
  seq.pop_back();
  const ColorFn induced = [&h, last](const IndexSet& s) {
    IndexSet t = s;
    t.push_back(last);
    return h(t);
  };
  IndexSet z = ramify(induced, r - 1, seq, budget);
  z.push_back(last);
  return z;
}

}  // namespace

std::optional<IndexSet> find_homogeneous(const Coloring& g, int m, HomogMethod method, std::span<const Index> pool,
                                         NodeBudget* budget) {
  if (m < 1 || m > g.n()) throw InputError("homogeneous set size must be in 1..n");
  const IndexSet candidates = checked_pool(g, pool);
  if (m > static_cast<int>(candidates.size())) return std::nullopt;
  NodeBudget local;
  NodeBudget& nodes = budget ? *budget : local;

  if (m < g.r()) return IndexSet(candidates.begin(), candidates.begin() + m);

  if (method == HomogMethod::Exhaustive) {
    const Accept none;
    return ExhaustiveSearch(g, candidates, m, nodes, none).run();
  }

  const ColorFn base = [&g](const IndexSet& s) { return g.at_rank(g.rank(s)); };
  IndexSet found = ramify(base, g.r(), candidates, nodes);
  if (static_cast<int>(found.size()) < m || !is_homogeneous(g, found)) return std::nullopt;
  return found;
}

bool is_homogeneous_over(const Coloring& g, std::span<const Index> A, std::span<const Index> X) {
  for (Index x : X) {
    if (std::binary_search(A.begin(), A.end(), x)) throw InputError("homogeneous set must avoid the parameter set");
  }
  const int r = g.r();
  for (int t = 0; t < r; ++t) {
    const int k = r - t;
    if (static_cast<int>(X.size()) < k) continue;
    const bool ok = for_each_combination(static_cast<Index>(A.size()), t, [&](std::span<const Index> spos) {
      const IndexSet s = select(A, spos);
      std::optional<Color> first;
      return for_each_combination(static_cast<Index>(X.size()), k, [&](std::span<const Index> wpos) {
        const IndexSet w = select(X, wpos);
        const Color col = g.at(merge_sorted(s, w));
        if (!first) first = col;
        return col == *first;
      });
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<IndexSet> find_homogeneous_over(const Coloring& g, std::span<const Index> A, int m,
                                              HomogMethod method, std::span<const Index> pool, NodeBudget* budget) {
  if (!strictly_increasing(A) || (!A.empty() && (A.front() < 0 || A.back() >= g.n())))
    throw InputError("parameter set must be sorted indices within the coloring");
  if (m < 1 || m > g.n() - static_cast<int>(A.size())) throw InputError("homogeneous set size out of range");

  IndexSet candidates;
  if (pool.empty()) {
    for (Index i = 0; i < g.n(); ++i) {
      if (!std::binary_search(A.begin(), A.end(), i)) candidates.push_back(i);
    }
  } else {
    candidates = checked_pool(g, pool);
    for (Index x : candidates) {
      if (std::binary_search(A.begin(), A.end(), x)) throw InputError("candidate pool meets the parameter set");
    }
  }
  if (m > static_cast<int>(candidates.size())) return std::nullopt;

  NodeBudget local;
  NodeBudget& nodes = budget ? *budget : local;
  const int r = g.r();
  const int q = static_cast<int>(candidates.size());
  const Accept verified = [&](const IndexSet& local_set) {
    return is_homogeneous_over(g, A, select(candidates, local_set));
  };

  if (m < r || q < r) {
    // Too small for the product coloring to say anything; search the definition directly.
    std::optional<IndexSet> hit;
    for_each_combination(q, m, [&](std::span<const Index> pos) {
      nodes.tick();
      const IndexSet local_set(pos.begin(), pos.end());
      if (verified(local_set)) hit = select(candidates, local_set);
      return !hit;
    });
    return hit;
  }

  // Product coloring: u -> (g(s u u[P]))_{s, P} over s in binom(A, <r), |P| = r - |s|.
  std::vector<std::pair<IndexSet, IndexSet>> params;
  for (int t = 0; t < r; ++t) {
    for (auto& s : combinations(static_cast<Index>(A.size()), t)) {
      const IndexSet sv = select(A, s);
      for (auto& P : combinations(r, r - t)) params.emplace_back(sv, std::move(P));
    }
  }
  std::map<std::vector<Color>, Color> ids;
  std::vector<Color> lex;
  lex.reserve(binomial(q, r));
  for_each_combination(q, r, [&](std::span<const Index> upos) {
    nodes.tick();
    const IndexSet u = select(candidates, upos);
    std::vector<Color> vec;
    vec.reserve(params.size());
    for (const auto& [s, P] : params) vec.push_back(g.at(merge_sorted(s, select(u, P))));
    auto it = ids.emplace(std::move(vec), static_cast<Color>(ids.size())).first;
    lex.push_back(it->second);
    return true;
  });
  const Coloring product(q, r, static_cast<int>(ids.size()), lex);
  const IndexSet local_all = iota_set(q);

  std::optional<IndexSet> local_hit;
  if (method == HomogMethod::Exhaustive) {
    local_hit = ExhaustiveSearch(product, local_all, m, nodes, verified).run();
  } else {
    local_hit = find_homogeneous(product, m, HomogMethod::Stepwise, {}, &nodes);
    if (local_hit && !verified(*local_hit)) local_hit.reset();
  }
  if (!local_hit) return std::nullopt;
  return select(candidates, *local_hit);
}

namespace {

std::vector<Color> decode_coloring(std::uint64_t index, int c, std::size_t slots) {
  std::vector<Color> colors(slots);
  for (std::size_t i = slots; i-- > 0;) {
    colors[i] = static_cast<Color>(index % static_cast<std::uint64_t>(c));
    index /= static_cast<std::uint64_t>(c);
  }
  return colors;
}

}  // namespace

ArrowResult arrow_check(const ArrowQuery& q, std::uint64_t case_limit, int threads) {
  if (q.n < 1 || q.r < 1 || q.c < 1 || q.p < 0) throw InputError("arrow query needs n, r, c >= 1 and p >= 0");
  if (q.m > q.n || q.r > q.m) throw InputError("arrow query needs r <= m <= n");

  const std::uint64_t slots = binomial(q.n, q.r);
  std::uint64_t colorings = 1;
  for (std::uint64_t i = 0; i < slots; ++i) {
    if (colorings > case_limit / static_cast<std::uint64_t>(q.c))
      throw BudgetExceeded("arrow check exceeds its case budget", colorings, case_limit);
    colorings *= static_cast<std::uint64_t>(q.c);
  }
  std::vector<IndexSet> param_sets;
  for (int t = 0; t <= std::min(q.p, q.n); ++t) {
    for (auto& A : combinations(q.n, t)) param_sets.push_back(std::move(A));
  }
  if (colorings > case_limit / param_sets.size())
    throw BudgetExceeded("arrow check exceeds its case budget", colorings * param_sets.size(), case_limit);

  std::atomic<std::uint64_t> first_failure{colorings};
  std::vector<IndexSet> failing_params(static_cast<std::size_t>(std::max(threads, 1)));
  std::vector<std::uint64_t> failing_index(failing_params.size(), colorings);

  auto scan = [&](std::size_t worker, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end && idx < first_failure.load(); ++idx) {
      const Coloring g(q.n, q.r, q.c, decode_coloring(idx, q.c, slots));
      for (const auto& A : param_sets) {
        const bool room = q.m <= q.n - static_cast<int>(A.size());
        const bool found = room && (A.empty() ? find_homogeneous(g, q.m, HomogMethod::Exhaustive).has_value()
                                              : find_homogeneous_over(g, A, q.m).has_value());
        if (!found) {
          failing_index[worker] = idx;
          failing_params[worker] = A;
          std::uint64_t cur = first_failure.load();
          while (idx < cur && !first_failure.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    }
  };

  const auto workers = static_cast<std::uint64_t>(std::max(threads, 1));
  if (workers == 1) {
    scan(0, 0, colorings);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (colorings + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(scan, static_cast<std::size_t>(w), w * chunk, std::min(colorings, (w + 1) * chunk));
    }
  }

  ArrowResult result;
  const std::uint64_t fail = first_failure.load();
  if (fail == colorings) {
    result.colorings_checked = colorings;
    return result;
  }
  result.holds = false;
  result.colorings_checked = fail + 1;
  result.counterexample.emplace(q.n, q.r, q.c, decode_coloring(fail, q.c, slots));
  for (std::size_t w = 0; w < failing_index.size(); ++w) {
    if (failing_index[w] == fail) result.counterexample_params = failing_params[w];
  }
  return result;
}

}  // namespace rainbowlab
