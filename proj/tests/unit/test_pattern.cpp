#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "rainbowlab/error.hpp"
#include "rainbowlab/pattern.hpp"

using namespace rainbowlab;

namespace {

// Color of an r-subset = dense id of its E-pattern.
Coloring pattern_coloring(const Partition& E, int r) {
  std::map<std::vector<int>, Color> ids;
  std::vector<Color> lex;
  for_each_combination(E.n(), r, [&](std::span<const Index> s) {
    const auto labels = e_pattern(s, E).labels;
    lex.push_back(ids.emplace(labels, static_cast<Color>(ids.size())).first->second);
    return true;
  });
  return Coloring(E.n(), r, std::max<int>(1, static_cast<int>(ids.size())), lex);
}

// Independent validation of a convexify result.
bool convex_result_ok(const Partition& E, const ConvexifyResult& res, int K, int L) {
  IndexSet X;
  std::vector<int> labels;
  for (const auto& cls : res.classes) {
    if (static_cast<int>(cls.size()) < L) return false;
    for (Index i : cls)
      if (!E.related(i, cls.front())) return false;
    labels.push_back(E.class_of(cls.front()));
    X.insert(X.end(), cls.begin(), cls.end());
  }
  std::sort(X.begin(), X.end());
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
  if (X != res.X || static_cast<int>(res.classes.size()) < K) return false;
  for (const auto& cls : res.classes)
    if (!is_convex(cls, X)) return false;
  return true;
}

}  // namespace

TEST_SUITE("pattern") {

TEST_CASE("e_pattern examples") {
  const Partition E = Partition::blocks(std::array<int, 2>{5, 5});
  CHECK(e_pattern(IndexSet{1, 2, 9}, E).labels == std::vector<int>{0, 0, 1});
  CHECK(e_pattern(IndexSet{5, 7, 8}, E).labels == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(e_pattern(IndexSet{1, 6, 3}, E), InputError);
  const Partition D = Partition::discrete(6);
  CHECK(e_pattern(IndexSet{0, 3, 5}, D).labels == std::vector<int>{0, 1, 2});
  CHECK(e_pattern(IndexSet{0, 3, 5}, D).block_count() == 3);
  const Partition P = Partition::from_labels(std::array<int, 6>{0, 1, 0, 1, 0, 1});
  CHECK(e_pattern(IndexSet{0, 1, 2, 3}, P).labels == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("e_pattern is invariant under renaming classes and moving within classes") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> labels(10);
    for (auto& l : labels) l = static_cast<int>(rng.below(4));
    const Partition E = Partition::from_labels(labels);
    std::vector<int> rename{3, 0, 2, 1};
    std::vector<int> renamed(10);
    for (int i = 0; i < 10; ++i) renamed[static_cast<std::size_t>(i)] = rename[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    const Partition F = Partition::from_labels(renamed);
    for_each_combination(10, 3, [&](std::span<const Index> s) {
      CHECK(e_pattern(s, E) == e_pattern(s, F));
      return true;
    });
  }
}

TEST_CASE("partition construction") {
  CHECK(Partition::blocks(std::array<int, 3>{2, 1, 3}).classes() == std::vector<IndexSet>{{0, 1}, {2}, {3, 4, 5}});
  CHECK(Partition(4, {{3, 1}, {0, 2}}).classes() == std::vector<IndexSet>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InputError);
  const Partition E(6, {{0, 3}, {1, 4, 5}, {2}});
  CHECK(E.restrict_to(IndexSet{1, 3, 5}) == std::vector<IndexSet>{{1, 5}, {3}});
}

TEST_CASE("is_convex examples") {
  CHECK(is_convex(IndexSet{0, 2}, IndexSet{0, 2, 5, 7}));
  CHECK_FALSE(is_convex(IndexSet{0, 4}, IndexSet{0, 1, 4}));
  CHECK(is_convex(IndexSet{}, IndexSet{0, 1, 4}));
  CHECK(is_convex(IndexSet{1}, IndexSet{0, 1, 4}));
  CHECK_THROWS_AS(is_convex(IndexSet{2}, IndexSet{0, 1}), InputError);
}

TEST_CASE("is_e_homogeneous examples") {
  const Partition E = Partition::blocks(std::array<int, 2>{4, 4});
  const IndexSet all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(is_e_homogeneous(all, E, Coloring(8, 2, 2)).holds);
  Coloring g = pattern_coloring(E, 2);
  CHECK(is_e_homogeneous(all, E, g).holds);
  // Plant a violation on one cross pair.
  const IndexSet planted{2, 6};
  g.set(planted, g.at(planted) == 0 ? 1 : 0);
  const auto chk = is_e_homogeneous(all, E, g);
  CHECK_FALSE(chk.holds);
  REQUIRE(chk.counterexample.has_value());
  CHECK((chk.counterexample->first == planted || chk.counterexample->second == planted));
  CHECK(e_pattern(chk.counterexample->first, E) == e_pattern(chk.counterexample->second, E));
  CHECK(g.at(chk.counterexample->first) != g.at(chk.counterexample->second));
  CHECK(is_e_homogeneous(IndexSet{0, 1, 4, 5}, E, g).holds);
}

TEST_CASE("is_e_homogeneous agrees with the pairwise oracle") {
  Rng rng(2);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<int> labels(8);
    for (auto& l : labels) l = static_cast<int>(rng.below(3));
    const Partition E = Partition::from_labels(labels);
    const int r = 1 + static_cast<int>(rng.below(3));
    Coloring g = pattern_coloring(E, r);
    if (rng.below(2)) g = oracle::random_coloring(rng, 8, r, 2);
    for (int k = r; k <= 6; ++k) {
      for_each_combination(8, k, [&](std::span<const Index> X) {
        CHECK(is_e_homogeneous(X, E, g).holds == oracle::e_homogeneous(X, E, g));
        return rng.below(4) != 0;
      });
    }
  }
}

TEST_CASE("convexify examples") {
  const Partition parity = Partition::from_labels(std::array<int, 8>{0, 1, 0, 1, 0, 1, 0, 1});
  const auto res = convexify(parity, 2, 2);
  REQUIRE(res.has_value());
  CHECK(res->X.size() == 4);
  CHECK(convex_result_ok(parity, *res, 2, 2));
  CHECK(oracle::convexify_feasible(parity, 2, 2));

  const Partition blocks = Partition::blocks(std::array<int, 3>{3, 3, 3});
  const auto b = convexify(blocks, 2, 2);
  REQUIRE(b.has_value());
  CHECK(b->classes == std::vector<IndexSet>{{0, 1}, {3, 4}});

  CHECK_THROWS_AS(convexify(Partition(4, {{0, 1, 2, 3}}), 2, 2), InputError);
  CHECK_THROWS_AS(convexify(blocks, 0, 2), InputError);

  // ABAB cannot be split into two convex pairs.
  const Partition abab = Partition::from_labels(std::array<int, 4>{0, 1, 0, 1});
  CHECK_FALSE(convexify(abab, 2, 2).has_value());
  CHECK_FALSE(oracle::convexify_feasible(abab, 2, 2));
}

TEST_CASE("convexify matches brute force on all two-class patterns up to n = 10") {
  for (int n = 4; n <= 10; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      if (bits & 1u) continue;  // index 0 always in class 0
      std::vector<int> labels(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(bits >> i & 1u);
      if (std::count(labels.begin(), labels.end(), 1) == 0) continue;
      const Partition E = Partition::from_labels(labels);
      const auto res = convexify(E, 2, 2);
      REQUIRE(res.has_value() == oracle::convexify_feasible(E, 2, 2));
      if (res) REQUIRE(convex_result_ok(E, *res, 2, 2));
    }
}

TEST_CASE("convexify on random three-class patterns and larger K, L") {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + static_cast<int>(rng.below(7));
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = static_cast<int>(rng.below(3));
    const Partition E = Partition::from_labels(labels);
    if (E.class_count() < 2) continue;
    for (auto [K, L] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
      if (K * L > n) continue;
      const auto res = convexify(E, K, L);
      CHECK(res.has_value() == oracle::convexify_feasible(E, K, L));
      if (res) CHECK(convex_result_ok(E, *res, K, L));
      const auto ram = convexify_ramification(E, K, L);
      if (ram) CHECK(convex_result_ok(E, *ram, K, L));
    }
  }
}

TEST_CASE("diagonal cut of fully interleaved classes") {
  for (int K = 1; K <= 3; ++K)
    for (int L = 1; L <= 3; ++L)
      for (int extra = 0; extra <= 2; ++extra) {
        const int per = K * L + extra;
        std::vector<IndexSet> classes(static_cast<std::size_t>(K));
        for (int i = 0; i < per * K; ++i) classes[static_cast<std::size_t>(i % K)].push_back(i);
        const auto cut = diagonal_cut(classes, L);
        IndexSet X;
        for (const auto& c : cut) {
          CHECK(static_cast<int>(c.size()) == L);
          X.insert(X.end(), c.begin(), c.end());
        }
        std::sort(X.begin(), X.end());
        for (const auto& c : cut) CHECK(is_convex(c, X));
      }
  std::vector<IndexSet> short_classes{{0, 2}, {1, 3}};
  CHECK_THROWS_AS(diagonal_cut(short_classes, 2), InputError);
}

TEST_CASE("ramification engine handles the fully interleaved case") {
  for (int K = 2; K <= 3; ++K)
    for (int L = 1; L <= 3; ++L) {
      const int per = L * std::max(K, L);
      std::vector<int> labels;
      for (int i = 0; i < per * K; ++i) labels.push_back(i % K);
      const Partition E = Partition::from_labels(labels);
      const auto res = convexify_ramification(E, K, L);
      REQUIRE(res.has_value());
      CHECK(res->engine == ConvexifyEngine::Ramification);
      CHECK(convex_result_ok(E, *res, K, L));
    }
}

TEST_CASE("extraction with a pattern coloring") {
  const Partition E = Partition::blocks(std::array<int, 6>{5, 5, 5, 5, 5, 5});
  const Coloring g = pattern_coloring(E, 2);
  const auto out = extract_e_homogeneous(E, g, {2, 2, 2, 2});
  REQUIRE(out.certificate.has_value());
  const auto& cert = *out.certificate;
  CHECK(cert.verified);
  CHECK(cert.classes.size() == 2);
  for (const auto& cls : cert.classes) CHECK(cls.size() == 2);
  CHECK(oracle::e_homogeneous(cert.X, E, g));
  CHECK(cert.pattern_colors.size() == 2);
  CHECK(out.failure_stage.empty());

  // r = 3 needs 3 + 3 classes of size 1 + 1 + 2 + 3 = 7.
  const Partition E3 = Partition::blocks(std::array<int, 6>{7, 7, 7, 7, 7, 7});
  const auto out3 = extract_e_homogeneous(E3, pattern_coloring(E3, 3), {3, 1, 3, 4});
  REQUIRE(out3.certificate.has_value());
  CHECK(oracle::e_homogeneous(out3.certificate->X, E3, pattern_coloring(E3, 3)));
}

TEST_CASE("extraction failures and preconditions") {
  const Partition small = Partition::blocks(std::array<int, 6>{2, 2, 2, 2, 2, 2});
  const auto out = extract_e_homogeneous(small, Coloring(12, 3, 1), {2, 1, 3, 1});
  CHECK_FALSE(out.certificate.has_value());
  CHECK(out.failure_stage.rfind("nested-sets", 0) == 0);

  const Partition few = Partition::blocks(std::array<int, 2>{5, 5});
  CHECK(extract_e_homogeneous(few, Coloring(10, 2, 1), {2, 2, 2, 1}).failure_stage.rfind("class-selection", 0) == 0);

  const Partition mixed = Partition::from_labels(std::array<int, 6>{0, 1, 0, 1, 2, 2});
  CHECK_THROWS_AS(extract_e_homogeneous(mixed, Coloring(6, 2, 1), {1, 1, 2, 1}), InputError);
  CHECK_THROWS_AS(extract_e_homogeneous(few, Coloring(10, 3, 1), {1, 1, 2, 1}), InputError);
  CHECK_THROWS_AS(extract_e_homogeneous(few, Coloring(9, 2, 1), {1, 1, 2, 1}), InputError);
}

TEST_CASE("extraction after convexify, through the domain") {
  std::vector<int> labels;
  for (int i = 0; i < 48; ++i) labels.push_back(i % 4);
  const Partition E = Partition::from_labels(labels);
  const auto conv = convexify(E, 4, 3);
  REQUIRE(conv.has_value());
  REQUIRE(convex_result_ok(E, *conv, 4, 3));
  // Without the domain the interleaved classes are rejected.
  CHECK_THROWS_AS(extract_e_homogeneous(E, pattern_coloring(E, 1), {2, 2, 1, 1}), InputError);
  const auto out = extract_e_homogeneous(E, pattern_coloring(E, 1), {2, 2, 1, 1}, conv->X);
  REQUIRE(out.certificate.has_value());
  CHECK(oracle::e_homogeneous(out.certificate->X, E, pattern_coloring(E, 1)));
  // r = 2 needs classes of size L + 3 inside the domain.
  const auto out2 = extract_e_homogeneous(E, pattern_coloring(E, 2), {1, 1, 2, 2}, conv->X);
  CHECK_FALSE(out2.certificate.has_value());
}

TEST_CASE("random colorings: every certificate verifies") {
  Rng rng(4);
  const Partition E = Partition::blocks(std::array<int, 6>{5, 5, 5, 5, 5, 5});
  int found = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Coloring g = oracle::random_coloring(rng, 30, 2, 2);
    const auto out = extract_e_homogeneous(E, g, {2, 2, 2, 2});
    if (!out.certificate) {
      CHECK_FALSE(out.failure_stage.empty());
      continue;
    }
    ++found;
    CHECK(out.certificate->verified);
    CHECK(oracle::e_homogeneous(out.certificate->X, E, g));
  }
  MESSAGE("random colorings with a certificate: " << found << "/25");
}

TEST_CASE("pipeline output is bounded by the largest E-homogeneous set") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    // r = 1 leaves room for K + r classes inside n <= 10; r = 2 cannot fit and must fail.
    const Partition E = Partition::blocks(std::array<int, 4>{2, 3, 2, 3});
    const Coloring g = oracle::random_coloring(rng, 10, 1, 2);
    const auto out = extract_e_homogeneous(E, g, {2, 1, 1, 2});
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << 10); ++mask) {
      IndexSet X;
      for (int i = 0; i < 10; ++i)
        if (mask >> i & 1u) X.push_back(i);
      if (static_cast<int>(X.size()) > best && oracle::e_homogeneous(X, E, g)) best = static_cast<int>(X.size());
    }
    if (out.certificate) CHECK(static_cast<int>(out.certificate->X.size()) <= best);
    const Coloring g2 = oracle::random_coloring(rng, 10, 2, 2);
    CHECK_FALSE(extract_e_homogeneous(E, g2, {2, 1, 2, 2}).certificate.has_value());
  }
}

}  // TEST_SUITE
