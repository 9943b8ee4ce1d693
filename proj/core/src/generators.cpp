#include <set>
#include <string>

#include "rainbowlab/error.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/random.hpp"

namespace rainbowlab {

namespace {

class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, const GeneratorOptions& options) : rng_(seed), options_(options) {}

  // Denominators double every 64 rejections.
  Rational draw(std::uint64_t rejections) {
    const std::int64_t shift = static_cast<std::int64_t>(std::min<std::uint64_t>(rejections / 64, 20));
    const std::int64_t max_den = options_.initial_denominator << shift;
    const std::int64_t den = rng_.between(1, max_den);
    const std::int64_t num = rng_.between(-options_.numerator_scale * den, options_.numerator_scale * den);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  Rng rng_;
  GeneratorOptions options_;
};

// Volumes (per arity) of the subsets seen so far; a candidate point is accepted
// only if every new subset containing it is nondegenerate and brings a new volume.
class VolumeRegistry {
 public:
  VolumeRegistry(int min_arity, int max_arity, bool forbid_zero)
      : min_arity_(min_arity), max_arity_(max_arity), forbid_zero_(forbid_zero),
        seen_(static_cast<std::size_t>(max_arity + 1)) {}

  bool try_add(PointSet& X, const RationalPoint& candidate) {
    std::vector<RationalPoint> pts = X.points();
    pts.push_back(candidate);
    const int n = static_cast<int>(pts.size());
    std::vector<std::set<Rational>> fresh(seen_.size());
    for (int a = min_arity_; a <= std::min(max_arity_, n); ++a) {
      bool ok = true;
      for_each_combination(n - 1, a - 1, [&](std::span<const Index> s) {
        std::vector<RationalPoint> tuple;
        for (Index i : s) tuple.push_back(pts[static_cast<std::size_t>(i)]);
        tuple.push_back(candidate);
        SquaredVolume v = squared_volume(tuple);
        if (v.is_zero() && forbid_zero_) {
          ok = false;
        } else if (!v.is_zero()) {
          auto& old = seen_[static_cast<std::size_t>(a)];
          ok = !old.contains(v.value) && fresh[static_cast<std::size_t>(a)].insert(v.value).second;
        }
        return ok;
      });
      if (!ok) return false;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) seen_[a].merge(fresh[a]);
    X.push_back(candidate);
    return true;
  }

 private:
  int min_arity_;
  int max_arity_;
  bool forbid_zero_;
  std::vector<std::set<Rational>> seen_;
};

}  // namespace

PointSet gen_general_position(int n, int d, std::uint64_t seed, const GeneratorOptions& options) {
  if (n < 1) throw InputError("need n >= 1");
  if (d < 1) throw InputError("need d >= 1");
  RationalSampler sampler(seed, options);
  VolumeRegistry registry(2, d + 1, true);
  PointSet X(d);
  std::uint64_t attempts = 0;
  std::uint64_t rejections = 0;
  while (X.size() < n) {
    if (++attempts > options.max_attempts)
      throw BudgetExceeded("general-position generator retry budget exhausted", attempts, options.max_attempts);
    RationalPoint p;
    for (int k = 0; k < d; ++k) p.coords.push_back(sampler.draw(rejections));
    if (!registry.try_add(X, p)) ++rejections;
  }
  return X;
}

std::pair<PointSet, Partition> gen_parallel_lines(std::span<const int> class_sizes, int d, std::uint64_t seed,
                                                  const GeneratorOptions& options) {
  if (d < 2) throw InputError("parallel lines need d >= 2");
  if (class_sizes.size() < 2) throw InputError("parallel lines need at least two classes");
  for (int s : class_sizes) {
    if (s < 2) throw InputError("every line needs at least two points");
  }
  RationalSampler sampler(seed, options);
  // Distances only: the lines force equal areas by construction, which is the point.
  VolumeRegistry registry(2, 2, true);
  PointSet X(d);
  std::uint64_t attempts = 0;
  std::uint64_t rejections = 0;
  for (std::size_t k = 0; k < class_sizes.size(); ++k) {
    for (int placed = 0; placed < class_sizes[k];) {
      if (++attempts > options.max_attempts)
        throw BudgetExceeded("parallel-lines generator retry budget exhausted", attempts, options.max_attempts);
      RationalPoint p;
      p.coords.push_back(sampler.draw(rejections));
      p.coords.emplace_back(static_cast<long>(k));
      for (int j = 2; j < d; ++j) p.coords.emplace_back(0);
      if (registry.try_add(X, p)) {
        ++placed;
      } else {
        ++rejections;
      }
    }
  }
  return {std::move(X), Partition::blocks(class_sizes)};
}

}  // namespace rainbowlab
