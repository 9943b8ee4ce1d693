#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rainbowlab/combinatorics.hpp"

namespace rainbowlab {

using Color = std::uint32_t;

/// A total map from r-subsets of {0..n-1} to colors {0..c-1}. Subsets are
/// addressed by their strictly increasing enumeration.
class Coloring {
 public:
  /// Constant coloring 0.
  Coloring(int n, int r, int c);
  /// Colors given in lexicographic order of r-subsets.
  Coloring(int n, int r, int c, std::span<const Color> lex_colors);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  int c() const noexcept { return c_; }
  std::uint64_t size() const noexcept { return colors_.size(); }

  /// s must be strictly increasing with entries < n and |s| = r (checked).
  Color at(std::span<const Index> s) const;
  void set(std::span<const Index> s, Color color);

  /// Unchecked lookup by colexicographic rank.
  Color at_rank(std::uint64_t rank) const { return colors_[rank]; }
  std::uint64_t rank(std::span<const Index> s) const;

  /// Colors listed in lexicographic order of r-subsets.
  std::vector<Color> lex_colors() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.c_ == b.c_ && a.colors_ == b.colors_;
  }

 private:
  void validate(std::span<const Index> s) const;

  int n_;
  int r_;
  int c_;
  std::vector<std::vector<std::uint64_t>> binom_;  // binom_[m][j] = C(m, j)
  std::vector<Color> colors_;                      // indexed by colex rank
};

/// True iff all r-subsets of X (sorted) receive the same color.
bool is_homogeneous(const Coloring& g, std::span<const Index> X);

}  // namespace rainbowlab
