#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbowlab/combinatorics.hpp"
#include "rainbowlab/geometry.hpp"
#include "rainbowlab/partition.hpp"

namespace rainbowlab {

// PLAIN: nonzero volumes of a-subsets are pairwise distinct.
// STRONG: all a-subsets have distinct nonzero volumes.
// STRICT: STRONG for every a' in 2..a, and the set spans at most a-1 affine dimensions.
enum class RainbowMode { Plain, Strong, Strict };

std::string_view to_string(RainbowMode mode);
RainbowMode parse_rainbow_mode(std::string_view text);

enum class ViolationKind {
  None,
  EqualVolume,    // first, second: distinct arity-subsets with the same nonzero volume (STRONG: any volume)
  Degenerate,     // first: an arity-subset of volume 0
  OffHyperplane,  // first: arity+1 affinely independent points
};

std::string_view to_string(ViolationKind kind);

struct RainbowVerdict {
  bool holds = true;
  ViolationKind kind = ViolationKind::None;
  int arity = 0;  // arity of the violating subsets (for OffHyperplane: the mode's a)
  IndexSet first;
  IndexSet second;
};

/// Re-checks a failing verdict's witness using exact geometry alone.
bool witness_is_valid(const PointSet& X, const RainbowVerdict& verdict);

/// Requires 2 <= a <= |X|, and a <= d+1 for STRICT. The witness of a failure is the
/// first violation in lexicographic enumeration order.
RainbowVerdict check_rainbow(const PointSet& X, int a, RainbowMode mode);

/// Largest a in 2..min(d+1, |X|) for which X is strictly a-rainbow.
std::optional<int> strict_level(const PointSet& X);

/// Hypergraph of forbidden index sets: a subset satisfies the rainbow predicate
/// iff it contains none of them. Sets are bitmasks, so |X| <= 64.
struct ConflictHypergraph {
  int n = 0;
  std::vector<std::uint64_t> bad_sets;
};

ConflictHypergraph build_conflicts(const PointSet& X, int a, RainbowMode mode);

enum class SearchMethod { Exact, Greedy };

std::string_view to_string(SearchMethod method);
SearchMethod parse_search_method(std::string_view text);

struct RainbowSearchBudget {
  int max_points = 48;
  std::uint64_t max_nodes = 20'000'000;
};

struct RainbowSubsetResult {
  IndexSet subset;
  RainbowVerdict verdict;  // check_rainbow on the chosen subset
  std::uint64_t nodes = 0;
};

/// EXACT: a maximum subset satisfying the predicate, lexicographically least among
/// maxima. GREEDY: index-order insertion. Throws BudgetExceeded in EXACT mode.
RainbowSubsetResult max_rainbow_subset(const PointSet& X, int a, RainbowMode mode, SearchMethod method,
                                       const RainbowSearchBudget& budget = {});

struct GeneratorOptions {
  std::uint64_t max_attempts = 200'000;
  std::int64_t initial_denominator = 8;
  std::int64_t numerator_scale = 16;
};

/// n points of Q^d, strongly a-rainbow for every 2 <= a <= d+1, by rejection
/// sampling with exact verification. Deterministic in (n, d, seed).
PointSet gen_general_position(int n, int d, std::uint64_t seed, const GeneratorOptions& options = {});

/// Class k is placed on the line y = k (other coordinates beyond x zero) with
/// distinct generic x-coordinates; all pairwise distances are kept distinct.
std::pair<PointSet, Partition> gen_parallel_lines(std::span<const int> class_sizes, int d, std::uint64_t seed,
                                                  const GeneratorOptions& options = {});

struct EConfigReport {
  std::vector<std::optional<int>> per_class_strict_level;
  std::optional<int> a_star;     // minimum per-class level; empty if some class has none
  int global_strong_level = 1;   // largest a with STRONG holding for all 2..a (1 if none)
  bool conclusion_holds = false; // every class strictly a_star-rainbow and X strongly a-rainbow for a <= a_star
  std::vector<RainbowVerdict> violations;  // indices refer to X
};

/// Requires E to partition X's index set with classes of size >= 2.
EConfigReport classify_e_config(const PointSet& X, const Partition& E);

}  // namespace rainbowlab
