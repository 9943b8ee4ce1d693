#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/combinatorics.hpp"
#include "rainbowlab/error.hpp"
#include "rainbowlab/geometry.hpp"

namespace rainbowlab {

// EXHAUSTIVE: lexicographically least homogeneous m-set, by pruned backtracking.
// STEPWISE: the end-homogeneous ramification construction; may fail even when
// a homogeneous set exists.
enum class HomogMethod { Exhaustive, Stepwise };

std::string_view to_string(HomogMethod method);
HomogMethod parse_homog_method(std::string_view text);

/// Returns a set of size >= m on which g is constant, or nullopt. Every
/// returned set has passed is_homogeneous. `pool` restricts the candidates
/// (sorted); empty means all of {0..n-1}.
std::optional<IndexSet> find_homogeneous(const Coloring& g, int m, HomogMethod method,
                                         std::span<const Index> pool = {}, NodeBudget* budget = nullptr);

/// Definition-level check: for every s subset of A with |s| < r, the map
/// u -> g(s u u) is constant on the (r-|s|)-subsets of X. X must avoid A.
bool is_homogeneous_over(const Coloring& g, std::span<const Index> A, std::span<const Index> X);

/// Homogeneous set over parameters A, drawn from `pool` (default: complement of A),
/// found through the product coloring that records g(s u u[P]) for every s and every
/// position pattern P. Candidates are verified with is_homogeneous_over; EXHAUSTIVE
/// keeps searching past unverified candidates and is therefore exact.
std::optional<IndexSet> find_homogeneous_over(const Coloring& g, std::span<const Index> A, int m,
                                              HomogMethod method = HomogMethod::Exhaustive,
                                              std::span<const Index> pool = {}, NodeBudget* budget = nullptr);

/// n -> (m)^r_{c,p}.
struct ArrowQuery {
  int n = 0;
  int m = 0;
  int r = 0;
  int c = 0;
  int p = 0;
};

struct ArrowResult {
  bool holds = true;
  std::uint64_t colorings_checked = 0;
  std::optional<Coloring> counterexample;  // first failing coloring in enumeration order
  IndexSet counterexample_params;          // its parameter set A
};

/// Exhausts all c^C(n,r) colorings and all A with |A| <= p. `case_limit` bounds
/// c^C(n,r) * #A; exceeding it throws BudgetExceeded before any work.
ArrowResult arrow_check(const ArrowQuery& q, std::uint64_t case_limit = 1ULL << 26, int threads = 1);

/// Semantic color of a 2a-subset: for each a' in 2..a, which a'-position-subsets are
/// degenerate and which pairs of them have equal volume. Bit order: a' ascending,
/// then position subsets (and pairs I < J) in lexicographic order.
struct VolumeColorCode {
  int a = 0;
  std::vector<bool> zero_flags;
  std::vector<bool> equal_pairs;

  auto operator<=>(const VolumeColorCode&) const = default;
  bool operator==(const VolumeColorCode&) const = default;

  /// Position-subset pairs (I, J) flagged equal, for arity a'.
  std::vector<std::pair<IndexSet, IndexSet>> equal_pairs_at(int arity) const;
  std::vector<IndexSet> zero_subsets_at(int arity) const;
  /// True iff the code records no degeneracy and no equality.
  bool is_clean() const;
};

struct VolumeColoring {
  Coloring coloring;
  std::vector<VolumeColorCode> codes;  // codes[color]
};

/// Code of one 2a-tuple given as points in increasing-index order.
VolumeColorCode volume_color_code(std::span<const RationalPoint> tuple, int a);

/// r = 2a coloring of X; colors are dense ids in first-seen lexicographic order.
VolumeColoring make_volume_coloring(const PointSet& X, int a);

}  // namespace rainbowlab
