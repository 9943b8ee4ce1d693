#include "rainbowlab/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim < 1) throw InputError("point set dimension must be >= 1");
}

PointSet::PointSet(int dim, std::vector<RationalPoint> points) : PointSet(dim) {
  points_.reserve(points.size());
  for (auto& p : points) push_back(std::move(p));
}

void PointSet::push_back(RationalPoint p) {
  if (p.dim() != dim_)
    throw InputError("point of dimension " + std::to_string(p.dim()) + " in a set of dimension " +
                     std::to_string(dim_));
  for (auto& x : p.coords) x.canonicalize();
  points_.push_back(std::move(p));
}

std::vector<RationalPoint> PointSet::gather(std::span<const Index> indices) const {
  std::vector<RationalPoint> out;
  out.reserve(indices.size());
  for (Index i : indices) {
    if (i < 0 || i >= size()) throw InputError("point index " + std::to_string(i) + " out of range");
    out.push_back(points_[static_cast<std::size_t>(i)]);
  }
  return out;
}

PointSet PointSet::subset(std::span<const Index> indices) const { return PointSet(dim_, gather(indices)); }

std::vector<std::pair<Index, Index>> PointSet::duplicates() const {
  std::map<RationalPoint, Index> first;
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < size(); ++i) {
    auto [it, inserted] = first.emplace(points_[static_cast<std::size_t>(i)], i);
    if (!inserted) out.emplace_back(it->second, i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Row-echelon reduction in place. Returns the rank and, through `sign`, the
// parity of row swaps; `diag_product` receives the product of pivots when the
// matrix is square and of full rank.
int eliminate(RationalMatrix& m, int& sign, Rational* diag_product) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t pivot_row = 0;
  sign = 1;
  if (diag_product) *diag_product = 1;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(m[p][col]) == 0) ++p;
    if (p == rows) continue;
    if (p != pivot_row) {
      std::swap(m[p], m[pivot_row]);
      sign = -sign;
    }
    const Rational pivot = m[pivot_row][col];
    if (diag_product) *diag_product *= pivot;
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col] / pivot;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

void check_common_dim(std::span<const RationalPoint> points) {
  for (const auto& p : points) {
    if (p.dim() != points.front().dim()) throw InputError("points of mixed dimension");
  }
}

std::vector<RationalPoint> differences(std::span<const RationalPoint> points) {
  std::vector<RationalPoint> out;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalPoint v = points[i];
    for (std::size_t k = 0; k < v.coords.size(); ++k) v.coords[k] -= points[0].coords[k];
    out.push_back(std::move(v));
  }
  return out;
}

Rational dot(const RationalPoint& u, const RationalPoint& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < u.coords.size(); ++k) s += u.coords[k] * v.coords[k];
  return s;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InputError("determinant of a non-square matrix");
  }
  if (m.empty()) return 1;
  int sign = 1;
  Rational product;
  const int r = eliminate(m, sign, &product);
  if (r < static_cast<int>(m.size())) return 0;
  return sign > 0 ? product : Rational(-product);
}

int rank(RationalMatrix m) {
  int sign = 1;
  return eliminate(m, sign, nullptr);
}

Rational squared_distance(const RationalPoint& p, const RationalPoint& q) {
  if (p.dim() != q.dim()) throw InputError("points of mixed dimension");
  Rational s = 0;
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    const Rational diff = p.coords[k] - q.coords[k];
    s += diff * diff;
  }
  return s;
}

SquaredVolume squared_volume(std::span<const RationalPoint> points) {
  if (points.empty()) throw InputError("volume of an empty tuple");
  check_common_dim(points);
  const auto diffs = differences(points);
  const std::size_t k = diffs.size();
  // More than d+1 points are always degenerate; the Gram matrix is singular too.
  RationalMatrix gram(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      gram[i][j] = dot(diffs[i], diffs[j]);
      gram[j][i] = gram[i][j];
    }
  }
  const Rational fact(static_cast<long>(factorial(static_cast<int>(k))));
  Rational v = determinant(std::move(gram)) / (fact * fact);
  v.canonicalize();
  return SquaredVolume{std::move(v)};
}

SquaredVolume squared_volume(const PointSet& set, std::span<const Index> indices) {
  const auto pts = set.gather(indices);
  return squared_volume(pts);
}

Rational cayley_menger_det(std::span<const RationalPoint> points) {
  if (points.empty()) throw InputError("Cayley-Menger determinant of an empty tuple");
  check_common_dim(points);
  const std::size_t a = points.size();
  RationalMatrix m(a + 1, std::vector<Rational>(a + 1));
  for (std::size_t i = 1; i <= a; ++i) {
    m[0][i] = 1;
    m[i][0] = 1;
  }
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      m[i + 1][j + 1] = squared_distance(points[i], points[j]);
      m[j + 1][i + 1] = m[i + 1][j + 1];
    }
  }
  return determinant(std::move(m));
}

Rational cayley_menger_det(const PointSet& set, std::span<const Index> indices) {
  const auto pts = set.gather(indices);
  return cayley_menger_det(pts);
}

Integer cayley_menger_factor(int a) {
  if (a < 1) throw InputError("arity must be >= 1");
  Integer f = 1;
  f <<= static_cast<mp_bitcnt_t>(a - 1);
  const Integer fact(static_cast<unsigned long>(factorial(a - 1)));
  f *= fact * fact;
  return (a % 2 == 0) ? f : Integer(-f);
}

namespace {

void check_pair(std::span<const RationalPoint> u, std::span<const RationalPoint> v) {
  if (u.size() != v.size()) throw InputError("tuples of different arity");
  if (u.empty()) throw InputError("empty tuple");
  check_common_dim(u);
  check_common_dim(v);
  if (u.front().dim() != v.front().dim()) throw InputError("tuples of different dimension");
}

}  // namespace

Rational volume_equality_polynomial(std::span<const RationalPoint> u, std::span<const RationalPoint> v) {
  check_pair(u, v);
  const Rational qu = cayley_menger_det(u);
  const Rational qv = cayley_menger_det(v);
  return Rational((qu - qv) * (qu + qv));
}

bool equal_volume(std::span<const RationalPoint> u, std::span<const RationalPoint> v) {
  check_pair(u, v);
  return squared_volume(u) == squared_volume(v);
}

bool is_degenerate(std::span<const RationalPoint> points) { return squared_volume(points).is_zero(); }

bool is_degenerate(const PointSet& set, std::span<const Index> indices) {
  return squared_volume(set, indices).is_zero();
}

int affine_rank(std::span<const RationalPoint> points) {
  if (points.empty()) return -1;
  check_common_dim(points);
  RationalMatrix m;
  for (auto& v : differences(points)) m.push_back(std::move(v.coords));
  return m.empty() ? 0 : rank(std::move(m));
}

int affine_rank(const PointSet& set) { return affine_rank(set.points()); }

IndexSet affine_basis(const PointSet& set) {
  IndexSet basis;
  std::vector<RationalPoint> chosen;
  for (Index i = 0; i < set.size(); ++i) {
    chosen.push_back(set[i]);
    if (affine_rank(chosen) == static_cast<int>(chosen.size()) - 1) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  return basis;
}

}  // namespace rainbowlab
