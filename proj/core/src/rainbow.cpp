#include <algorithm>
#include <map>
#include <string>

#include "rainbowlab/error.hpp"
#include "rainbowlab/rainbow.hpp"

namespace rainbowlab {

std::string_view to_string(RainbowMode mode) {
  switch (mode) {
    case RainbowMode::Plain: return "plain";
    case RainbowMode::Strong: return "strong";
    case RainbowMode::Strict: return "strict";
  }
  return "?";
}

RainbowMode parse_rainbow_mode(std::string_view text) {
  if (text == "plain") return RainbowMode::Plain;
  if (text == "strong") return RainbowMode::Strong;
  if (text == "strict") return RainbowMode::Strict;
  throw InputError("unknown rainbow mode '" + std::string(text) + "'");
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::None: return "none";
    case ViolationKind::EqualVolume: return "equal-volume";
    case ViolationKind::Degenerate: return "degenerate";
    case ViolationKind::OffHyperplane: return "off-hyperplane";
  }
  return "?";
}

namespace {

RainbowVerdict scan_arity(const PointSet& X, int a, bool strong) {
  RainbowVerdict verdict;
  std::map<Rational, IndexSet> seen;
  for_each_combination(X.size(), a, [&](std::span<const Index> s) {
    SquaredVolume v = squared_volume(X, s);
    if (v.is_zero()) {
      if (strong) {
        verdict = {false, ViolationKind::Degenerate, a, IndexSet(s.begin(), s.end()), {}};
        return false;
      }
      return true;
    }
    auto [it, inserted] = seen.emplace(std::move(v.value), IndexSet(s.begin(), s.end()));
    if (!inserted) {
      verdict = {false, ViolationKind::EqualVolume, a, it->second, IndexSet(s.begin(), s.end())};
      return false;
    }
    return true;
  });
  return verdict;
}

bool valid_subset(const PointSet& X, const IndexSet& s, std::size_t size) {
  return s.size() == size && strictly_increasing(s) && !s.empty() && s.front() >= 0 && s.back() < X.size();
}

}  // namespace

bool witness_is_valid(const PointSet& X, const RainbowVerdict& verdict) {
  const auto a = static_cast<std::size_t>(verdict.arity);
  switch (verdict.kind) {
    case ViolationKind::None:
      return verdict.holds;
    case ViolationKind::EqualVolume: {
      if (!valid_subset(X, verdict.first, a) || !valid_subset(X, verdict.second, a)) return false;
      if (verdict.first == verdict.second) return false;
      const auto u = X.gather(verdict.first);
      const auto v = X.gather(verdict.second);
      return equal_volume(u, v) && !is_degenerate(u);
    }
    case ViolationKind::Degenerate:
      return valid_subset(X, verdict.first, a) && is_degenerate(X, verdict.first);
    case ViolationKind::OffHyperplane: {
      if (!valid_subset(X, verdict.first, a + 1)) return false;
      const auto pts = X.gather(verdict.first);
      return affine_rank(pts) == verdict.arity;
    }
  }
  return false;
}

RainbowVerdict check_rainbow(const PointSet& X, int a, RainbowMode mode) {
  if (X.empty()) throw InputError("rainbow check on an empty point set");
  if (a < 2 || a > X.size())
    throw InputError("arity " + std::to_string(a) + " outside 2.." + std::to_string(X.size()));
  switch (mode) {
    case RainbowMode::Plain:
      return scan_arity(X, a, false);
    case RainbowMode::Strong:
      return scan_arity(X, a, true);
    case RainbowMode::Strict: {
      if (a > X.dim() + 1)
        throw InputError("strict arity " + std::to_string(a) + " exceeds d+1 = " + std::to_string(X.dim() + 1));
      for (int ap = 2; ap <= a; ++ap) {
        RainbowVerdict v = scan_arity(X, ap, true);
        if (!v.holds) return v;
      }
      if (affine_rank(X) > a - 1) {
        IndexSet basis = affine_basis(X);
        basis.resize(static_cast<std::size_t>(a + 1));
        return {false, ViolationKind::OffHyperplane, a, std::move(basis), {}};
      }
      return {};
    }
  }
  return {};
}

std::optional<int> strict_level(const PointSet& X) {
  if (X.size() < 2) throw InputError("strict level needs at least two points");
  for (int a = std::min(X.dim() + 1, X.size()); a >= 2; --a) {
    if (check_rainbow(X, a, RainbowMode::Strict).holds) return a;
  }
  return std::nullopt;
}

namespace {

RainbowVerdict remap(RainbowVerdict v, const IndexSet& cls) {
  for (auto* s : {&v.first, &v.second}) {
    for (auto& i : *s) i = cls[static_cast<std::size_t>(i)];
  }
  return v;
}

}  // namespace

EConfigReport classify_e_config(const PointSet& X, const Partition& E) {
  if (E.n() != X.size())
    throw InputError("partition covers " + std::to_string(E.n()) + " indices but the set has " +
                     std::to_string(X.size()) + " points");
  for (const auto& cls : E.classes()) {
    if (cls.size() < 2) throw InputError("every class needs at least two points");
  }

  EConfigReport report;
  std::vector<PointSet> parts;
  for (const auto& cls : E.classes()) {
    parts.push_back(X.subset(cls));
    report.per_class_strict_level.push_back(strict_level(parts.back()));
  }

  const bool all_defined = std::all_of(report.per_class_strict_level.begin(), report.per_class_strict_level.end(),
                                       [](const auto& lvl) { return lvl.has_value(); });
  if (all_defined) {
    int lo = *report.per_class_strict_level.front();
    for (const auto& lvl : report.per_class_strict_level) lo = std::min(lo, *lvl);
    report.a_star = lo;
  }

  int strong = 1;
  RainbowVerdict first_strong_failure;
  for (int a = 2; a <= X.size(); ++a) {
    RainbowVerdict v = check_rainbow(X, a, RainbowMode::Strong);
    if (!v.holds) {
      first_strong_failure = std::move(v);
      break;
    }
    strong = a;
  }
  report.global_strong_level = strong;

  bool ok = report.a_star.has_value();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int level = report.a_star.value_or(2);
    RainbowVerdict v = check_rainbow(parts[k], level, RainbowMode::Strict);
    if (!v.holds) {
      ok = false;
      report.violations.push_back(remap(std::move(v), E.classes()[k]));
    }
  }
  if (report.a_star && strong < *report.a_star) {
    ok = false;
    report.violations.push_back(first_strong_failure);
  }
  report.conclusion_holds = ok;
  return report;
}

}  // namespace rainbowlab
