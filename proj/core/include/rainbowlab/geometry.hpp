#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rainbowlab/combinatorics.hpp"
#include "rainbowlab/rational.hpp"

namespace rainbowlab {

/// A point of Q^d.
struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  RationalPoint(std::initializer_list<Rational> c) : coords(c) {}

  int dim() const noexcept { return static_cast<int>(coords.size()); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; }
};

/// Indexed points of a common dimension. The index is the identity of a point;
/// repeated coordinates are allowed and reported by duplicates().
class PointSet {
 public:
  explicit PointSet(int dim);
  PointSet(int dim, std::vector<RationalPoint> points);

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  bool empty() const noexcept { return points_.empty(); }

  const RationalPoint& operator[](Index i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<RationalPoint>& points() const noexcept { return points_; }

  void push_back(RationalPoint p);

  /// Points at the given indices, in the given order.
  std::vector<RationalPoint> gather(std::span<const Index> indices) const;
  /// New PointSet of the selected points, reindexed 0..k-1.
  PointSet subset(std::span<const Index> indices) const;

  /// Index pairs (i < j) with identical coordinates.
  std::vector<std::pair<Index, Index>> duplicates() const;
  bool has_duplicates() const { return !duplicates().empty(); }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  int dim_;
  std::vector<RationalPoint> points_;
};

/// Squared (a-1)-dimensional simplex volume. Zero exactly for affinely
/// degenerate tuples.
struct SquaredVolume {
  Rational value;

  bool is_zero() const { return sgn(value) == 0; }
  friend bool operator==(const SquaredVolume& a, const SquaredVolume& b) { return a.value == b.value; }
  friend bool operator<(const SquaredVolume& a, const SquaredVolume& b) { return a.value < b.value; }
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over Q.
Rational determinant(RationalMatrix m);
/// Exact rank by Gaussian elimination over Q.
int rank(RationalMatrix m);

/// det(G) / ((a-1)!)^2 with G the Gram matrix of v_i - v_0.
SquaredVolume squared_volume(std::span<const RationalPoint> points);
SquaredVolume squared_volume(const PointSet& set, std::span<const Index> indices);

/// The bordered Cayley-Menger determinant of the a points: (a+1)x(a+1),
/// first row and column (0, 1, ..., 1), inner block the squared distances.
Rational cayley_menger_det(std::span<const RationalPoint> points);
Rational cayley_menger_det(const PointSet& set, std::span<const Index> indices);

/// (-1)^a 2^(a-1) ((a-1)!)^2, the factor relating cayley_menger_det to squared_volume.
Integer cayley_menger_factor(int a);

/// p_a(u, v) = (q(u) - q(v)) (q(u) + q(v)) with q the Cayley-Menger determinant.
Rational volume_equality_polynomial(std::span<const RationalPoint> u, std::span<const RationalPoint> v);

/// True iff the two tuples have the same volume. Arity and dimension must agree.
bool equal_volume(std::span<const RationalPoint> u, std::span<const RationalPoint> v);

bool is_degenerate(std::span<const RationalPoint> points);
bool is_degenerate(const PointSet& set, std::span<const Index> indices);

Rational squared_distance(const RationalPoint& p, const RationalPoint& q);

/// Dimension of the affine hull (rank of v_i - v_0); -1 for an empty input.
int affine_rank(std::span<const RationalPoint> points);
int affine_rank(const PointSet& set);

/// Indices of a maximal affinely independent subfamily, chosen greedily in index order.
IndexSet affine_basis(const PointSet& set);

}  // namespace rainbowlab
