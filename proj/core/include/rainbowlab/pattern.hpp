#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbowlab/coloring.hpp"
#include "rainbowlab/combinatorics.hpp"
#include "rainbowlab/partition.hpp"

namespace rainbowlab {

struct EHomogCheck {
  bool holds = true;
  // Two r-subsets of X with the same E-pattern and different colors.
  std::optional<std::pair<IndexSet, IndexSet>> counterexample;
};

/// g(s) = g(t) whenever s, t in binom(X, r) share an E-pattern. X sorted.
EHomogCheck is_e_homogeneous(std::span<const Index> X, const Partition& E, const Coloring& g);

enum class ConvexifyEngine { Ramification, Direct };

struct ConvexifyResult {
  IndexSet X;
  std::vector<IndexSet> classes;  // E restricted to X, each convex in X
  ConvexifyEngine engine = ConvexifyEngine::Direct;
};

struct ConvexifyOptions {
  bool use_ramification = true;
  bool use_direct = true;
  std::uint64_t max_nodes = 5'000'000;
};

/// X with at least K classes of E|X, each of size exactly L and convex in X.
/// Tries the ramification construction (order-type coloring of rank pairs, then
/// the separated/interleaved coloring of class pairs, then the diagonal cut) and
/// falls back to a direct search. Requires E to have >= 2 classes.
std::optional<ConvexifyResult> convexify(const Partition& E, int K, int L, const ConvexifyOptions& options = {});

/// The ramification engine alone.
std::optional<ConvexifyResult> convexify_ramification(const Partition& E, int K, int L);

/// The diagonal cut for classes that pairwise interleave: given K classes listed
/// so that Y_0(l) < Y_1(l) < ... < Y_{K-1}(l) < Y_0(l+1) for all l, class k keeps
/// ranks L*k .. L*(k+1)-1. Each class needs at least K*L elements.
std::vector<IndexSet> diagonal_cut(std::span<const IndexSet> interleaved, int L);

struct ExtractionRequest {
  int K = 1;  // classes wanted
  int L = 1;  // elements per class
  int r = 1;
  int c = 1;
};

struct EHomogCertificate {
  IndexSet X;
  std::vector<IndexSet> classes;                 // E restricted to X
  std::map<std::vector<int>, Color> pattern_colors;  // EPattern labels -> color
  bool verified = false;
};

struct ExtractionOutcome {
  std::optional<EHomogCertificate> certificate;
  std::string failure_stage;  // empty on success
  int classes_used = 0;       // the K* actually available
};

/// Builds, for each of the available classes, nested sets Y^0 > ... > Y^r with
/// designated elements removed between stages, each Y^i_k homogeneous for g over
/// the earlier classes' Y^i and all lower-stage designated elements; then colors
/// r-sets of classes by the g-type of their designated elements and keeps K classes
/// from a homogeneous set of K + r. The union of the surviving Y^r is returned only
/// if it passes is_e_homogeneous.
///
/// E's classes must be convex within `domain` (default: all of {0..n-1}).
ExtractionOutcome extract_e_homogeneous(const Partition& E, const Coloring& g, const ExtractionRequest& req,
                                        std::span<const Index> domain = {}, std::uint64_t max_nodes = 20'000'000);

}  // namespace rainbowlab
