#include <map>
#include <string>

#include "rainbowlab/ramsey.hpp"

namespace rainbowlab {

namespace {

// Visits (arity, I) in code bit order for zero flags and (arity, I, J) for pairs.
template <typename ZeroFn, typename PairFn>
void walk_code_layout(int a, ZeroFn&& on_zero, PairFn&& on_pair) {
  const int width = 2 * a;
  for (int ap = 2; ap <= a; ++ap) {
    const auto subsets = combinations(width, ap);
    for (const auto& I : subsets) on_zero(ap, I);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = i + 1; j < subsets.size(); ++j) on_pair(ap, subsets[i], subsets[j]);
    }
  }
}

// Colex rank of a sorted subset; matches the Coloring storage order.
std::uint64_t colex_rank(std::span<const Index> s) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) k += binomial(s[i], static_cast<std::int64_t>(i) + 1);
  return k;
}

}  // namespace

std::vector<std::pair<IndexSet, IndexSet>> VolumeColorCode::equal_pairs_at(int arity) const {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  std::size_t bit = 0;
  walk_code_layout(
      a, [](int, const IndexSet&) {},
      [&](int ap, const IndexSet& I, const IndexSet& J) {
        if (ap == arity && equal_pairs[bit]) out.emplace_back(I, J);
        ++bit;
      });
  return out;
}

std::vector<IndexSet> VolumeColorCode::zero_subsets_at(int arity) const {
  std::vector<IndexSet> out;
  std::size_t bit = 0;
  walk_code_layout(
      a,
      [&](int ap, const IndexSet& I) {
        if (ap == arity && zero_flags[bit]) out.push_back(I);
        ++bit;
      },
      [](int, const IndexSet&, const IndexSet&) {});
  return out;
}

bool VolumeColorCode::is_clean() const {
  for (bool b : zero_flags) {
    if (b) return false;
  }
  for (bool b : equal_pairs) {
    if (b) return false;
  }
  return true;
}

VolumeColorCode volume_color_code(std::span<const RationalPoint> tuple, int a) {
  if (a < 2) throw InputError("volume coloring needs a >= 2");
  if (static_cast<int>(tuple.size()) != 2 * a) throw InputError("volume color code needs exactly 2a points");
  VolumeColorCode code;
  code.a = a;
  std::map<IndexSet, SquaredVolume> vol;
  walk_code_layout(
      a,
      [&](int, const IndexSet& I) {
        std::vector<RationalPoint> pts;
        for (Index i : I) pts.push_back(tuple[static_cast<std::size_t>(i)]);
        auto v = squared_volume(pts);
        code.zero_flags.push_back(v.is_zero());
        vol.emplace(I, std::move(v));
      },
      [&](int, const IndexSet& I, const IndexSet& J) { code.equal_pairs.push_back(vol.at(I) == vol.at(J)); });
  return code;
}

VolumeColoring make_volume_coloring(const PointSet& X, int a) {
  if (a < 2) throw InputError("volume coloring needs a >= 2");
  if (X.size() < 2 * a)
    throw InputError("volume coloring needs at least 2a = " + std::to_string(2 * a) + " points");

  // Volumes of all a'-subsets of X, by colex rank.
  std::vector<std::vector<SquaredVolume>> cache(static_cast<std::size_t>(a + 1));
  for (int ap = 2; ap <= a; ++ap) {
    auto& slot = cache[static_cast<std::size_t>(ap)];
    slot.resize(binomial(X.size(), ap));
    for_each_combination(X.size(), ap, [&](std::span<const Index> s) {
      slot[colex_rank(s)] = squared_volume(X, s);
      return true;
    });
  }

  const int width = 2 * a;
  std::vector<std::vector<IndexSet>> layouts(static_cast<std::size_t>(a + 1));
  for (int ap = 2; ap <= a; ++ap) layouts[static_cast<std::size_t>(ap)] = combinations(width, ap);

  std::map<VolumeColorCode, Color> ids;
  std::vector<VolumeColorCode> codes;
  std::vector<Color> lex;
  for_each_combination(X.size(), width, [&](std::span<const Index> s) {
    VolumeColorCode code;
    code.a = a;
    for (int ap = 2; ap <= a; ++ap) {
      const auto& subsets = layouts[static_cast<std::size_t>(ap)];
      std::vector<const SquaredVolume*> vols;
      vols.reserve(subsets.size());
      for (const auto& I : subsets) {
        const IndexSet global = select(s, I);
        vols.push_back(&cache[static_cast<std::size_t>(ap)][colex_rank(global)]);
        code.zero_flags.push_back(vols.back()->is_zero());
      }
      for (std::size_t i = 0; i < vols.size(); ++i) {
        for (std::size_t j = i + 1; j < vols.size(); ++j) code.equal_pairs.push_back(*vols[i] == *vols[j]);
      }
    }
    auto [it, inserted] = ids.emplace(code, static_cast<Color>(codes.size()));
    if (inserted) codes.push_back(std::move(code));
    lex.push_back(it->second);
    return true;
  });
  return {Coloring(X.size(), width, static_cast<int>(codes.size()), lex), std::move(codes)};
}

}  // namespace rainbowlab
