#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "rainbowlab/error.hpp"
#include "rainbowlab/geometry.hpp"
#include "rainbowlab/random.hpp"

using namespace rainbowlab;

namespace {

std::vector<RationalPoint> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalPoint> out;
  for (auto row : rows) {
    RationalPoint p;
    for (long v : row) p.coords.emplace_back(v);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RationalPoint> random_tuple(Rng& rng, int a, int d, std::int64_t bound) {
  std::vector<RationalPoint> u;
  for (int i = 0; i < a; ++i) u.push_back(oracle::random_point(rng, d, bound));
  return u;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("squared volume of small simplices") {
  CHECK(squared_volume(pts({{0}, {1}})).value == 1);
  CHECK(squared_volume(pts({{0, 0}, {1, 0}, {0, 1}})).value == Rational(1, 4));
  CHECK(squared_volume(pts({{0, 0}, {1, 0}, {2, 0}})).is_zero());
  CHECK(squared_volume(pts({{3, 4}})).value == 1);  // a single point: empty Gram determinant
  CHECK(squared_volume(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).value == Rational(1, 36));
  CHECK_THROWS_AS(squared_volume(std::vector<RationalPoint>{}), InputError);
  CHECK_THROWS_AS(squared_volume(pts({{0, 0}, {1}})), InputError);
}

TEST_CASE("d+2 points in Q^d are degenerate") {
  Rng rng(11);
  for (int d = 1; d <= 4; ++d)
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_tuple(rng, d + 2, d, 1000);
      CHECK(squared_volume(u).is_zero());
      CHECK(is_degenerate(u));
      CHECK(cayley_menger_det(u) == 0);
    }
}

TEST_CASE("Cayley-Menger determinant values") {
  CHECK(cayley_menger_det(pts({{0}, {1}})) == 2);
  CHECK(cayley_menger_det(pts({{0, 0}, {1, 0}, {0, 1}})) == -4);
  CHECK(cayley_menger_det(pts({{0, 0}, {1, 0}, {2, 0}})) == 0);
  CHECK(cayley_menger_factor(2) == 2);
  CHECK(cayley_menger_factor(3) == -16);
  CHECK(cayley_menger_factor(4) == 288);
}

TEST_CASE("Cayley-Menger identity and Gram oracle on random tuples") {
  Rng rng(2024);
  for (int a = 1; a <= 5; ++a)
    for (int d = 1; d <= 4; ++d)
      for (int trial = 0; trial < 8; ++trial) {
        const auto u = random_tuple(rng, a, d, 50);
        const Rational v = squared_volume(u).value;
        CHECK(cayley_menger_det(u) == Rational(cayley_menger_factor(a)) * v);
        CHECK(v == oracle::gram_volume(u));
      }
}

TEST_CASE("determinant and rank against the permutation expansion") {
  Rng rng(5);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      for (auto& row : m)
        for (auto& x : row) x = oracle::random_rational(rng, 4);
      if (trial % 3 == 0 && n > 1) m[1] = m[0];  // force singular
      const Rational det = determinant(m);
      CHECK(det == oracle::leibniz_det(m));
      CHECK((rank(m) == n) == (det != 0));
    }
  CHECK(rank({{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}}) == 1);
  CHECK(rank({}) == 0);
}

TEST_CASE("volume invariance under rational isometries and permutations") {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng.below(4));
    const int a = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    auto u = random_tuple(rng, a, d, 30);
    const Rational v = squared_volume(u).value;

    auto shuffled = u;
    for (int i = a - 1; i > 0; --i) std::swap(shuffled[static_cast<std::size_t>(i)], shuffled[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    CHECK(squared_volume(shuffled).value == v);

    const RationalPoint shift = oracle::random_point(rng, d, 30);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = d - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> sign(static_cast<std::size_t>(d));
    for (auto& s : sign) s = rng.below(2) ? 1 : -1;
    auto moved = u;
    for (auto& p : moved) {
      RationalPoint q;
      for (int t = 0; t < d; ++t) q.coords.push_back(sign[static_cast<std::size_t>(t)] * p[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] + shift[static_cast<std::size_t>(t)]);
      p = q;
    }
    CHECK(squared_volume(moved).value == v);
    CHECK(cayley_menger_det(moved) == cayley_menger_det(u));

    const Rational t = oracle::random_rational(rng, 9);
    auto scaled = u;
    for (auto& p : scaled)
      for (auto& x : p.coords) x *= t;
    Rational factor = 1;
    for (int k = 0; k < 2 * (a - 1); ++k) factor *= t;
    CHECK(squared_volume(scaled).value == factor * v);
  }
}

TEST_CASE("equal volume examples and the p_a factorization") {
  CHECK(equal_volume(pts({{0, 0}, {1, 0}, {0, 1}}), pts({{0, 0}, {1, 0}, {1, 1}})));
  const auto u = pts({{0, 0}, {2, 1}, {5, 3}});
  CHECK(equal_volume(u, u));
  CHECK_FALSE(equal_volume(pts({{0}, {1}}), pts({{0}, {2}})));
  CHECK_THROWS_AS(equal_volume(pts({{0}, {1}}), pts({{0}, {1}, {2}})), InputError);

  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 2 + static_cast<int>(rng.below(2));
    const auto x = oracle::random_grid_points(rng, a, 2, 3).points();
    const auto y = oracle::random_grid_points(rng, a, 2, 3).points();
    const Rational qx = cayley_menger_det(x);
    const Rational qy = cayley_menger_det(y);
    const bool eq = equal_volume(x, y);
    CHECK(eq == ((qx - qy) * (qx + qy) == 0));
    CHECK(eq == (volume_equality_polynomial(x, y) == 0));
  }
}

TEST_CASE("degeneracy matches affine rank") {
  CHECK(is_degenerate(pts({{0, 0}, {1, 0}, {2, 0}})));
  CHECK_FALSE(is_degenerate(pts({{0, 0}, {1, 0}, {0, 1}})));
  CHECK(is_degenerate(pts({{1, 1}, {1, 1}})));
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const int a = 2 + static_cast<int>(rng.below(4));
    const auto u = oracle::random_grid_points(rng, a, d, 3).points();
    CHECK(is_degenerate(u) == (affine_rank(u) < a - 1));
    CHECK(is_degenerate(u) == (oracle::gram_volume(u) == 0));
  }
}

TEST_CASE("affine basis and point set bookkeeping") {
  PointSet X(2, pts({{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 1}}));
  CHECK(affine_rank(X) == 2);
  CHECK(affine_basis(X) == IndexSet{0, 1, 3});
  CHECK(X.duplicates() == std::vector<std::pair<Index, Index>>{{1, 4}});
  CHECK(X.subset(IndexSet{3, 0}) == PointSet(2, pts({{0, 1}, {0, 0}})));
  CHECK_THROWS_AS(X.gather(IndexSet{5}), InputError);
  CHECK_THROWS_AS(PointSet(0), InputError);
  CHECK(squared_distance(X[0], X[2]) == 8);
}

}  // TEST_SUITE
