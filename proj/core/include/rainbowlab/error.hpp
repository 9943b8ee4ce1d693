#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbowlab {

/// Malformed input or violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An explicit search or exhaustion budget was hit before the answer was known.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t used, std::uint64_t limit)
      : std::runtime_error(what + " (used " + std::to_string(used) + " of " + std::to_string(limit) + ")"),
        used_(used),
        limit_(limit) {}

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t used_;
  std::uint64_t limit_;
};

/// Node counter shared by the branch-and-bound and exhaustive searches.
class NodeBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 50'000'000;

  explicit NodeBudget(std::uint64_t limit = kDefaultLimit, std::string what = "search budget exceeded")
      : limit_(limit), what_(std::move(what)) {}

  void tick() {
    if (++used_ > limit_) throw BudgetExceeded(what_, used_, limit_);
  }
  void tick(std::uint64_t n) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded(what_, used_, limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
  std::string what_;
};

}  // namespace rainbowlab
