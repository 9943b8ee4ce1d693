#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "rainbowlab/error.hpp"
#include "rainbowlab/pattern.hpp"
#include "rainbowlab/ramsey.hpp"

namespace rainbowlab {

std::vector<IndexSet> diagonal_cut(std::span<const IndexSet> interleaved, int L) {
  const auto K = static_cast<int>(interleaved.size());
  std::vector<IndexSet> out;
  for (int k = 0; k < K; ++k) {
    const auto& cls = interleaved[static_cast<std::size_t>(k)];
    if (static_cast<int>(cls.size()) < K * L) throw InputError("diagonal cut needs K*L elements per class");
    out.emplace_back(cls.begin() + L * k, cls.begin() + L * (k + 1));
  }
  return out;
}

namespace {

ConvexifyResult assemble(std::vector<IndexSet> classes, ConvexifyEngine engine) {
  ConvexifyResult res;
  res.engine = engine;
  for (const auto& c : classes) res.X.insert(res.X.end(), c.begin(), c.end());
  std::sort(res.X.begin(), res.X.end());
  std::sort(classes.begin(), classes.end(), [](const IndexSet& x, const IndexSet& y) { return x.front() < y.front(); });
  res.classes = std::move(classes);
  return res;
}

bool valid(const ConvexifyResult& res, int K, int L) {
  if (static_cast<int>(res.classes.size()) < K) return false;
  for (const auto& c : res.classes) {
    if (static_cast<int>(c.size()) < L || !is_convex(c, res.X)) return false;
  }
  return true;
}

// Blocks of L consecutive class members placed left to right; for a fixed order
// of classes the earliest admissible block is always best.
class DirectSearch {
 public:
  DirectSearch(const std::vector<IndexSet>& classes, int K, int L, NodeBudget& budget)
      : classes_(classes), K_(K), L_(L), budget_(budget), used_(classes.size(), false) {}

  std::optional<std::vector<IndexSet>> run() {
    if (place(-1)) return blocks_;
    return std::nullopt;
  }

 private:
  bool place(Index after) {
    if (static_cast<int>(blocks_.size()) == K_) return true;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (used_[c]) continue;
      budget_.tick();
      const auto& cls = classes_[c];
      const auto start = std::upper_bound(cls.begin(), cls.end(), after);
      if (cls.end() - start < L_) continue;
      used_[c] = true;
      blocks_.emplace_back(start, start + L_);
      if (place(blocks_.back().back())) return true;
      blocks_.pop_back();
      used_[c] = false;
    }
    return false;
  }

  const std::vector<IndexSet>& classes_;
  int K_;
  int L_;
  NodeBudget& budget_;
  std::vector<bool> used_;
  std::vector<IndexSet> blocks_;
};

}  // namespace

std::optional<ConvexifyResult> convexify_ramification(const Partition& E, int K, int L) {
  if (K < 1 || L < 1) throw InputError("K and L must be >= 1");
  // The diagonal cut consumes K*L ranks per class (L^2 when K <= L).
  const int ranks = L * std::max(K, L);
  std::vector<IndexSet> big;
  for (const auto& c : E.classes()) {
    if (static_cast<int>(c.size()) >= ranks) big.push_back(c);
  }
  if (static_cast<int>(big.size()) < K) return std::nullopt;
  if (K == 1) return assemble({IndexSet(big[0].begin(), big[0].begin() + L)}, ConvexifyEngine::Ramification);

  const int kstar = static_cast<int>(big.size());
  int lstar = static_cast<int>(big[0].size());
  for (const auto& c : big) lstar = std::min(lstar, static_cast<int>(c.size()));
  auto at = [&](int k, int l) { return big[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; };

  // Rank pairs colored by the order type of (X_k(l_i) : k < K*, i < 2).
  IndexSet I;
  if (ranks == 1) {
    I = {0};
  } else {
    std::map<std::vector<int>, Color> ids;
    std::vector<Color> lex;
    for_each_combination(lstar, 2, [&](std::span<const Index> pair) {
      std::vector<Index> vals;
      for (int k = 0; k < kstar; ++k) {
        for (Index l : pair) vals.push_back(at(k, l));
      }
      std::vector<int> order(vals.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) { return vals[static_cast<std::size_t>(x)] < vals[static_cast<std::size_t>(y)]; });
      lex.push_back(ids.emplace(std::move(order), static_cast<Color>(ids.size())).first->second);
      return true;
    });
    const Coloring f(lstar, 2, static_cast<int>(ids.size()), lex);
    auto hit = find_homogeneous(f, ranks, HomogMethod::Exhaustive);
    if (!hit) return std::nullopt;
    I = std::move(*hit);
  }

  auto restricted = [&](int k) {
    IndexSet out;
    for (Index l : I) out.push_back(at(k, l));
    return out;
  };
  auto separated = [](const IndexSet& a, const IndexSet& b) { return a.back() < b.front() || b.back() < a.front(); };
  auto interleaved = [](const IndexSet& a, const IndexSet& b) {
    const IndexSet& lo = a.front() < b.front() ? a : b;
    const IndexSet& hi = a.front() < b.front() ? b : a;
    for (std::size_t l = 0; l < lo.size(); ++l) {
      if (!(lo[l] < hi[l])) return false;
      if (l + 1 < lo.size() && !(hi[l] < lo[l + 1])) return false;
    }
    return true;
  };

  // Class pairs: 0 = separated, 1 = interleaved.
  std::vector<Color> lex;
  bool consistent = true;
  for_each_combination(kstar, 2, [&](std::span<const Index> pair) {
    const IndexSet a = restricted(pair[0]);
    const IndexSet b = restricted(pair[1]);
    if (separated(a, b)) {
      lex.push_back(0);
    } else if (interleaved(a, b)) {
      lex.push_back(1);
    } else {
      consistent = false;
    }
    return consistent;
  });
  if (!consistent) return std::nullopt;
  const Coloring g(kstar, 2, 2, lex);
  const auto J = find_homogeneous(g, K, HomogMethod::Exhaustive);
  if (!J) return std::nullopt;

  std::vector<IndexSet> picked;
  for (Index k : *J) picked.push_back(restricted(k));
  std::vector<IndexSet> classes;
  if (g.at(IndexSet{(*J)[0], (*J)[1]}) == 0) {
    for (auto& c : picked) classes.emplace_back(c.begin(), c.begin() + L);
  } else {
    std::sort(picked.begin(), picked.end(), [](const IndexSet& x, const IndexSet& y) { return x.front() < y.front(); });
    classes = diagonal_cut(picked, L);
  }
  auto res = assemble(std::move(classes), ConvexifyEngine::Ramification);
  if (!valid(res, K, L)) return std::nullopt;
  return res;
}

std::optional<ConvexifyResult> convexify(const Partition& E, int K, int L, const ConvexifyOptions& options) {
  if (E.class_count() < 2) throw InputError("convexify needs at least two classes");
  if (K < 1 || L < 1) throw InputError("K and L must be >= 1");
  if (options.use_ramification) {
    if (auto res = convexify_ramification(E, K, L)) return res;
  }
  if (options.use_direct) {
    NodeBudget budget(options.max_nodes, "convexify search budget exceeded");
    if (auto blocks = DirectSearch(E.classes(), K, L, budget).run()) {
      auto res = assemble(std::move(*blocks), ConvexifyEngine::Direct);
      if (valid(res, K, L)) return res;
    }
  }
  return std::nullopt;
}

}  // namespace rainbowlab
