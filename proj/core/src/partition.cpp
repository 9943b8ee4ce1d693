#include "rainbowlab/partition.hpp"

#include <algorithm>
#include <string>

#include "rainbowlab/error.hpp"

namespace rainbowlab {

Partition::Partition(int n, std::vector<IndexSet> classes) : n_(n), label_(static_cast<std::size_t>(n), -1) {
  if (n < 0) throw InputError("partition size must be non-negative");
  for (auto& cls : classes) {
    if (cls.empty()) throw InputError("partition classes must be nonempty");
    std::sort(cls.begin(), cls.end());
  }
  std::sort(classes.begin(), classes.end(), [](const IndexSet& x, const IndexSet& y) { return x.front() < y.front(); });
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (Index i : classes[k]) {
      if (i < 0 || i >= n) throw InputError("partition index " + std::to_string(i) + " out of range");
      if (label_[static_cast<std::size_t>(i)] != -1)
        throw InputError("partition index " + std::to_string(i) + " appears twice");
      label_[static_cast<std::size_t>(i)] = static_cast<int>(k);
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (label_[static_cast<std::size_t>(i)] == -1)
      throw InputError("partition does not cover index " + std::to_string(i));
  }
  classes_ = std::move(classes);
}

Partition Partition::discrete(int n) {
  std::vector<IndexSet> classes;
  for (Index i = 0; i < n; ++i) classes.push_back({i});
  return Partition(n, std::move(classes));
}

Partition Partition::blocks(std::span<const int> sizes) {
  std::vector<IndexSet> classes;
  Index next = 0;
  for (int s : sizes) {
    if (s < 1) throw InputError("block sizes must be positive");
    IndexSet cls;
    for (int j = 0; j < s; ++j) cls.push_back(next++);
    classes.push_back(std::move(cls));
  }
  return Partition(next, std::move(classes));
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::vector<IndexSet> by_label;
  std::vector<int> slot;
  for (Index i = 0; i < static_cast<Index>(labels.size()); ++i) {
    const int lab = labels[static_cast<std::size_t>(i)];
    if (lab < 0) throw InputError("class labels must be non-negative");
    if (static_cast<std::size_t>(lab) >= slot.size()) slot.resize(static_cast<std::size_t>(lab) + 1, -1);
    if (slot[static_cast<std::size_t>(lab)] == -1) {
      slot[static_cast<std::size_t>(lab)] = static_cast<int>(by_label.size());
      by_label.emplace_back();
    }
    by_label[static_cast<std::size_t>(slot[static_cast<std::size_t>(lab)])].push_back(i);
  }
  return Partition(static_cast<int>(labels.size()), std::move(by_label));
}

std::vector<IndexSet> Partition::restrict_to(std::span<const Index> domain) const {
  std::vector<IndexSet> out(classes_.size());
  for (Index i : domain) {
    if (i < 0 || i >= n_) throw InputError("domain index out of range");
    out[static_cast<std::size_t>(class_of(i))].push_back(i);
  }
  std::erase_if(out, [](const IndexSet& c) { return c.empty(); });
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) { return x.front() < y.front(); });
  return out;
}

int EPattern::block_count() const {
  int hi = -1;
  for (int l : labels) hi = std::max(hi, l);
  return hi + 1;
}

EPattern e_pattern(std::span<const Index> s, const Partition& E) {
  if (!strictly_increasing(s)) throw InputError("pattern tuple must be strictly increasing");
  EPattern p;
  std::vector<std::pair<int, int>> seen;  // class -> label
  for (Index i : s) {
    if (i < 0 || i >= E.n()) throw InputError("pattern index " + std::to_string(i) + " out of range");
    const int cls = E.class_of(i);
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == cls; });
    if (it == seen.end()) {
      seen.emplace_back(cls, static_cast<int>(seen.size()));
      p.labels.push_back(seen.back().second);
    } else {
      p.labels.push_back(it->second);
    }
  }
  return p;
}

bool is_convex(std::span<const Index> A, std::span<const Index> Y) {
  if (!strictly_increasing(A) || !strictly_increasing(Y)) throw InputError("convexity sets must be sorted");
  if (!std::includes(Y.begin(), Y.end(), A.begin(), A.end())) throw InputError("A must be a subset of Y");
  if (A.size() < 2) return true;
  const auto lo = std::lower_bound(Y.begin(), Y.end(), A.front());
  const auto hi = std::upper_bound(Y.begin(), Y.end(), A.back());
  return static_cast<std::size_t>(hi - lo) == A.size();
}

}  // namespace rainbowlab
