#pragma once

#include <compare>
#include <span>
#include <vector>

#include "rainbowlab/combinatorics.hpp"

namespace rainbowlab {

/// An equivalence relation on {0..n-1}, stored as disjoint sorted classes
/// ordered by least element.
class Partition {
 public:
  /// Validates disjointness, coverage of {0..n-1} and non-emptiness.
  Partition(int n, std::vector<IndexSet> classes);

  /// Singleton classes.
  static Partition discrete(int n);
  /// Consecutive blocks of the given sizes.
  static Partition blocks(std::span<const int> sizes);
  /// Class label per index.
  static Partition from_labels(std::span<const int> labels);

  int n() const noexcept { return n_; }
  int class_count() const noexcept { return static_cast<int>(classes_.size()); }
  const std::vector<IndexSet>& classes() const noexcept { return classes_; }
  const IndexSet& class_at(int k) const { return classes_[static_cast<std::size_t>(k)]; }
  /// Position of i's class in classes().
  int class_of(Index i) const { return label_[static_cast<std::size_t>(i)]; }
  bool related(Index i, Index j) const { return class_of(i) == class_of(j); }

  /// Classes of E restricted to `domain` (sorted subset of {0..n-1}); empty intersections dropped.
  std::vector<IndexSet> restrict_to(std::span<const Index> domain) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.classes_ == b.classes_; }

 private:
  int n_;
  std::vector<IndexSet> classes_;
  std::vector<int> label_;
};

/// Equivalence pattern of an r-tuple's positions, as a restricted growth string:
/// labels[i] is the number of distinct classes met before position i's class first
/// appears. Two tuples have the same pattern iff their labels agree.
struct EPattern {
  std::vector<int> labels;

  int arity() const noexcept { return static_cast<int>(labels.size()); }
  bool same_class(int i, int j) const { return labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)]; }
  int block_count() const;

  auto operator<=>(const EPattern&) const = default;
};

/// The pattern of a strictly increasing tuple s under E.
EPattern e_pattern(std::span<const Index> s, const Partition& E);

/// True iff no element of Y \ A lies strictly between two elements of A.
/// Both sets sorted; A must be a subset of Y.
bool is_convex(std::span<const Index> A, std::span<const Index> Y);

}  // namespace rainbowlab
