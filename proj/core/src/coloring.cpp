#include "rainbowlab/coloring.hpp"

#include <optional>
#include <string>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

namespace {
constexpr std::uint64_t kMaxSubsets = std::uint64_t{1} << 28;
}

Coloring::Coloring(int n, int r, int c) : n_(n), r_(r), c_(c) {
  if (r < 1 || r > n) throw InputError("coloring needs 1 <= r <= n");
  if (c < 1) throw InputError("coloring needs c >= 1");
  const std::uint64_t total = binomial(n, r);
  if (total > kMaxSubsets) throw InputError("coloring too large: C(n, r) = " + std::to_string(total));
  binom_.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(r + 1), 0));
  for (int m = 0; m <= n; ++m) {
    for (int j = 0; j <= r; ++j) binom_[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = binomial(m, j);
  }
  colors_.assign(total, 0);
}

Coloring::Coloring(int n, int r, int c, std::span<const Color> lex_colors) : Coloring(n, r, c) {
  if (lex_colors.size() != colors_.size())
    throw InputError("coloring needs " + std::to_string(colors_.size()) + " colors, got " +
                     std::to_string(lex_colors.size()));
  std::size_t i = 0;
  for_each_combination(n, r, [&](std::span<const Index> s) {
    set(s, lex_colors[i++]);
    return true;
  });
}

void Coloring::validate(std::span<const Index> s) const {
  if (static_cast<int>(s.size()) != r_)
    throw InputError("expected an " + std::to_string(r_) + "-subset, got " + std::to_string(s.size()) + " indices");
  if (!strictly_increasing(s)) throw InputError("subset indices must be strictly increasing");
  if (s.front() < 0 || s.back() >= n_) throw InputError("subset index out of range");
}

std::uint64_t Coloring::rank(std::span<const Index> s) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) k += binom_[static_cast<std::size_t>(s[i])][i + 1];
  return k;
}

Color Coloring::at(std::span<const Index> s) const {
  validate(s);
  return colors_[rank(s)];
}

void Coloring::set(std::span<const Index> s, Color color) {
  validate(s);
  if (color >= static_cast<Color>(c_))
    throw InputError("color " + std::to_string(color) + " outside 0.." + std::to_string(c_ - 1));
  colors_[rank(s)] = color;
}

std::vector<Color> Coloring::lex_colors() const {
  std::vector<Color> out;
  out.reserve(colors_.size());
  for_each_combination(n_, r_, [&](std::span<const Index> s) {
    out.push_back(colors_[rank(s)]);
    return true;
  });
  return out;
}

bool is_homogeneous(const Coloring& g, std::span<const Index> X) {
  if (static_cast<int>(X.size()) < g.r()) return true;
  std::optional<Color> first;
  IndexSet sub(static_cast<std::size_t>(g.r()));
  return for_each_combination(static_cast<Index>(X.size()), g.r(), [&](std::span<const Index> pos) {
    for (std::size_t i = 0; i < pos.size(); ++i) sub[i] = X[static_cast<std::size_t>(pos[i])];
    const Color col = g.at(sub);
    if (!first) first = col;
    return col == *first;
  });
}

}  // namespace rainbowlab
