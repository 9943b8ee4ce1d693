#pragma once

// Brute-force reference implementations. They follow the definitions directly and
// share no search or elimination code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/combinatorics.hpp"
#include "rainbowlab/geometry.hpp"
#include "rainbowlab/partition.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/random.hpp"
#include "rainbowlab/skew.hpp"

namespace oracle {

using namespace rainbowlab;

// Determinant by permutation expansion.
inline Rational leibniz_det(const RationalMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Rational(1);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Rational term = inversions % 2 ? Rational(-1) : Rational(1);
    for (int i = 0; i < n; ++i) term *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Squared volume from the Gram matrix, with the determinant expanded by Leibniz.
inline Rational gram_volume(const std::vector<RationalPoint>& pts) {
  const std::size_t k = pts.size() - 1;
  RationalMatrix G(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational dot = 0;
      for (std::size_t t = 0; t < pts[0].coords.size(); ++t)
        dot += (pts[i + 1][t] - pts[0][t]) * (pts[j + 1][t] - pts[0][t]);
      G[i][j] = dot;
    }
  Rational f = Rational(static_cast<long>(factorial(static_cast<int>(k))));
  return leibniz_det(G) / (f * f);
}

// Rainbow predicate compared only through Cayley-Menger determinants: equal squared
// volumes at a fixed arity are exactly equal determinants.
inline bool rainbow(const PointSet& X, std::span<const Index> subset, int a, RainbowMode mode) {
  const int n = static_cast<int>(subset.size());
  auto check_arity = [&](int k, bool strong) {
    std::vector<Rational> q;
    for_each_combination(n, k, [&](std::span<const Index> pos) {
      q.push_back(cayley_menger_det(X, select(subset, pos)));
      return true;
    });
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (strong && q[i] == 0) return false;
      for (std::size_t j = i + 1; j < q.size(); ++j)
        if (q[i] == q[j] && (strong || q[i] != 0)) return false;
    }
    return true;
  };
  if (mode == RainbowMode::Plain) return check_arity(a, false);
  if (mode == RainbowMode::Strong) return check_arity(a, true);
  for (int k = 2; k <= a; ++k)
    if (!check_arity(k, true)) return false;
  // Every (a+1)-subset must be degenerate.
  return for_each_combination(n, a + 1, [&](std::span<const Index> pos) {
    return cayley_menger_det(X, select(subset, pos)) == 0;
  });
}

// Size of the largest subset of X satisfying the predicate. Arities above the
// subset size hold vacuously.
inline int max_rainbow_size(const PointSet& X, int a, RainbowMode mode) {
  const int n = X.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    if (rainbow(X, s, a, mode)) best = size;
  }
  return best;
}

inline bool homogeneous(const Coloring& g, std::span<const Index> X) {
  std::optional<Color> seen;
  return for_each_combination(static_cast<Index>(X.size()), g.r(), [&](std::span<const Index> pos) {
    const Color c = g.at(select(X, pos));
    if (!seen) seen = c;
    return *seen == c;
  });
}

// Largest homogeneous subset size, by enumerating all subsets (n <= 16).
inline int max_homogeneous_size(const Coloring& g) {
  int best = std::min(g.n(), g.r() - 1);
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    IndexSet s;
    for (int i = 0; i < g.n(); ++i)
      if (mask >> i & 1u) s.push_back(i);
    if (homogeneous(g, s)) best = size;
  }
  return best;
}

// Homogeneity over A by the definition: for every s in A of size < r, u -> g(s + u)
// is constant on (r - |s|)-subsets of X.
inline bool homogeneous_over(const Coloring& g, std::span<const Index> A, std::span<const Index> X) {
  for (Index x : X)
    if (std::find(A.begin(), A.end(), x) != A.end()) return false;
  const int a = static_cast<int>(A.size());
  for (int k = 0; k < g.r() && k <= a; ++k) {
    bool ok = for_each_combination(a, k, [&](std::span<const Index> spos) {
      const IndexSet s = select(A, spos);
      std::optional<Color> seen;
      return for_each_combination(static_cast<Index>(X.size()), g.r() - k, [&](std::span<const Index> upos) {
        IndexSet t = select(X, upos);
        t.insert(t.end(), s.begin(), s.end());
        std::sort(t.begin(), t.end());
        const Color c = g.at(t);
        if (!seen) seen = c;
        return *seen == c;
      });
    });
    if (!ok) return false;
  }
  return true;
}

// E-homogeneity by comparing every pair of r-subsets.
inline bool e_homogeneous(std::span<const Index> X, const Partition& E, const Coloring& g) {
  auto pattern = [&](const IndexSet& s) {
    std::vector<int> labels;
    for (std::size_t i = 0; i < s.size(); ++i) {
      int label = -1;
      for (std::size_t j = 0; j < i; ++j)
        if (E.related(s[i], s[j])) label = labels[j];
      if (label < 0) label = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
      labels.push_back(label);
    }
    return labels;
  };
  const auto subsets = combinations(static_cast<Index>(X.size()), g.r());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const IndexSet s = select(X, subsets[i]);
      const IndexSet t = select(X, subsets[j]);
      if (pattern(s) == pattern(t) && g.at(s) != g.at(t)) return false;
    }
  return true;
}

// Is there an X whose restriction of E has >= K classes of size >= L, each convex in X?
// It suffices to look for K classes of size exactly L, so we enumerate (K*L)-subsets.
inline bool convexify_feasible(const Partition& E, int K, int L) {
  return !for_each_combination(E.n(), K * L, [&](std::span<const Index> X) {
    const auto classes = E.restrict_to(X);
    if (static_cast<int>(classes.size()) != K) return true;
    for (const auto& cls : classes) {
      if (static_cast<int>(cls.size()) != L) return true;
      // Convex: the class occupies consecutive positions of X.
      const auto first = std::find(X.begin(), X.end(), cls.front()) - X.begin();
      const auto last = std::find(X.begin(), X.end(), cls.back()) - X.begin();
      if (last - first + 1 != L) return true;
    }
    return false;
  });
}

inline Rational random_rational(Rng& rng, std::int64_t bound) {
  const std::int64_t num = rng.between(-bound, bound);
  const std::int64_t den = rng.between(1, bound);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

inline RationalPoint random_point(Rng& rng, int d, std::int64_t bound) {
  RationalPoint p;
  for (int i = 0; i < d; ++i) p.coords.push_back(random_rational(rng, bound));
  return p;
}

// Small-integer points make coincidences (equal volumes, collinearity) likely.
inline PointSet random_grid_points(Rng& rng, int n, int d, int side) {
  PointSet X(d);
  for (int i = 0; i < n; ++i) {
    RationalPoint p;
    for (int t = 0; t < d; ++t) p.coords.emplace_back(static_cast<long>(rng.between(0, side - 1)));
    X.push_back(std::move(p));
  }
  return X;
}

inline Coloring random_coloring(Rng& rng, int n, int r, int c) {
  std::vector<Color> colors(binomial(n, r));
  for (auto& col : colors) col = static_cast<Color>(rng.below(static_cast<std::uint64_t>(c)));
  return Coloring(n, r, c, colors);
}

inline int delta(const BinaryWord& x, const BinaryWord& y) {
  int i = 0;
  while (x.bit(i) == y.bit(i)) ++i;
  return i;
}

}  // namespace oracle
