#include "rainbowlab/pattern.hpp"

#include <algorithm>
#include <string>

#include "rainbowlab/error.hpp"
#include "rainbowlab/ramsey.hpp"

namespace rainbowlab {

EHomogCheck is_e_homogeneous(std::span<const Index> X, const Partition& E, const Coloring& g) {
  if (g.n() != E.n()) throw InputError("coloring and partition disagree on n");
  if (!strictly_increasing(X) || (!X.empty() && (X.front() < 0 || X.back() >= E.n())))
    throw InputError("X must be sorted indices within the partition");

  EHomogCheck result;
  std::map<std::vector<int>, std::pair<Color, IndexSet>> buckets;
  for_each_combination(static_cast<Index>(X.size()), g.r(), [&](std::span<const Index> pos) {
    IndexSet s = select(X, pos);
    const Color col = g.at(s);
    auto key = e_pattern(s, E).labels;
    auto it = buckets.find(key);
    if (it == buckets.end()) {
      buckets.emplace(std::move(key), std::make_pair(col, std::move(s)));
      return true;
    }
    if (it->second.first != col) {
      result.holds = false;
      result.counterexample.emplace(it->second.second, std::move(s));
      return false;
    }
    return true;
  });
  return result;
}

namespace {

IndexSet sorted_union(const std::vector<IndexSet>& parts) {
  IndexSet out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

ExtractionOutcome fail(std::string stage, int used) {
  ExtractionOutcome out;
  out.failure_stage = std::move(stage);
  out.classes_used = used;
  return out;
}

}  // namespace

ExtractionOutcome extract_e_homogeneous(const Partition& E, const Coloring& g, const ExtractionRequest& req,
                                        std::span<const Index> domain, std::uint64_t max_nodes) {
  if (req.K < 1 || req.L < 1 || req.r < 1 || req.c < 1) throw InputError("K, L, r, c must all be >= 1");
  if (g.n() != E.n()) throw InputError("coloring and partition disagree on n");
  if (g.r() != req.r) throw InputError("coloring arity does not match the request");
  if (g.c() > req.c) throw InputError("coloring uses more colors than the request allows");

  IndexSet all;
  if (domain.empty()) {
    for (Index i = 0; i < E.n(); ++i) all.push_back(i);
    domain = all;
  } else if (!strictly_increasing(domain)) {
    throw InputError("domain must be sorted");
  }
  const std::vector<IndexSet> classes = E.restrict_to(domain);
  for (const auto& cls : classes) {
    if (!is_convex(cls, domain)) throw InputError("classes must be convex in the domain; convexify first");
  }

  const int r = req.r;
  // Stage t removes t+1 designated elements: a class in position i of an r-set of
  // classes contributes at most r-i elements to an r-tuple, and uses stage r-1-i.
  std::vector<int> need(static_cast<std::size_t>(r + 1));
  need[static_cast<std::size_t>(r)] = req.L;
  for (int t = r - 1; t >= 0; --t) need[static_cast<std::size_t>(t)] = need[static_cast<std::size_t>(t + 1)] + t + 1;

  if (static_cast<int>(classes.size()) < req.K + r)
    return fail("class-selection: fewer than K + r classes", static_cast<int>(classes.size()));
  std::vector<IndexSet> chosen;
  for (const auto& cls : classes) {
    if (static_cast<int>(cls.size()) >= need[0]) chosen.push_back(cls);
  }
  const int kstar = static_cast<int>(chosen.size());
  if (kstar < req.K + r)
    return fail("nested-sets: fewer than K + r classes of size >= " + std::to_string(need[0]), kstar);

  NodeBudget budget(max_nodes, "E-homogeneous extraction node budget exceeded");
  const auto ks = static_cast<std::size_t>(kstar);
  std::vector<std::vector<IndexSet>> Y(static_cast<std::size_t>(r + 1), std::vector<IndexSet>(ks));
  std::vector<std::vector<IndexSet>> designated(static_cast<std::size_t>(r), std::vector<IndexSet>(ks));

  for (int t = 0; t <= r; ++t) {
    const auto ts = static_cast<std::size_t>(t);
    IndexSet lower_designated;
    for (int tp = 0; tp < t; ++tp) {
      for (const auto& d : designated[static_cast<std::size_t>(tp)]) lower_designated.insert(lower_designated.end(), d.begin(), d.end());
    }
    for (std::size_t k = 0; k < ks; ++k) {
      IndexSet pool;
      if (t == 0) {
        pool = chosen[k];
      } else {
        const auto& prev = Y[ts - 1][k];
        const auto& drop = designated[ts - 1][k];
        std::set_difference(prev.begin(), prev.end(), drop.begin(), drop.end(), std::back_inserter(pool));
      }
      std::vector<IndexSet> params(Y[ts].begin(), Y[ts].begin() + static_cast<std::ptrdiff_t>(k));
      params.push_back(lower_designated);
      const IndexSet A = sorted_union(params);

      std::optional<IndexSet> found;
      if (static_cast<int>(pool.size()) >= need[ts]) {
        found = find_homogeneous_over(g, A, need[ts], HomogMethod::Exhaustive, pool, &budget);
      }
      if (!found)
        return fail("nested-sets: stage " + std::to_string(t) + ", class " + std::to_string(k), kstar);
      Y[ts][k] = std::move(*found);
      if (t < r) designated[ts][k].assign(Y[ts][k].begin(), Y[ts][k].begin() + t + 1);
    }
  }

  // Color r-sets of classes by the g-type of their designated elements.
  std::vector<Color> lex;
  std::map<std::vector<Color>, Color> ids;
  for_each_combination(kstar, r, [&](std::span<const Index> s) {
    IndexSet array;
    for (int i = 0; i < r; ++i) {
      const auto& d = designated[static_cast<std::size_t>(r - 1 - i)][static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
      array.insert(array.end(), d.begin(), d.end());
    }
    std::vector<Color> type;
    for_each_combination(static_cast<Index>(array.size()), r, [&](std::span<const Index> pos) {
      IndexSet sub = select(array, pos);
      std::sort(sub.begin(), sub.end());
      type.push_back(g.at(sub));
      return true;
    });
    auto it = ids.emplace(std::move(type), static_cast<Color>(ids.size())).first;
    lex.push_back(it->second);
    return true;
  });
  const Coloring type_coloring(kstar, r, static_cast<int>(ids.size()), lex);
  const auto top = find_homogeneous(type_coloring, req.K + r, HomogMethod::Exhaustive, {}, &budget);
  if (!top) return fail("type-homogeneity: no homogeneous set of K + r classes", kstar);

  std::vector<IndexSet> kept;
  for (int i = 0; i < req.K; ++i) kept.push_back(Y[static_cast<std::size_t>(r)][static_cast<std::size_t>((*top)[static_cast<std::size_t>(i)])]);
  EHomogCertificate cert;
  cert.X = sorted_union(kept);
  cert.classes = E.restrict_to(cert.X);

  const EHomogCheck check = is_e_homogeneous(cert.X, E, g);
  if (!check.holds) return fail("verification: union is not E-homogeneous", kstar);
  cert.verified = true;
  for_each_combination(static_cast<Index>(cert.X.size()), r, [&](std::span<const Index> pos) {
    const IndexSet s = select(cert.X, pos);
    cert.pattern_colors.emplace(e_pattern(s, E).labels, g.at(s));
    return true;
  });

  ExtractionOutcome out;
  out.certificate = std::move(cert);
  out.classes_used = kstar;
  return out;
}

}  // namespace rainbowlab
