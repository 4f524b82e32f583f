#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>

#include "dfmo/model.hpp"

namespace dfmo {

/// Memoized, budgeted access to a problem's black box for one solver run.
///
/// Only cache misses consume budget. Once the budget is spent, evaluate()
/// returns nullptr for every point not already cached.
class Oracle {
 public:
  Oracle(const ProblemSpec& problem, std::size_t max_evals)
      : problem_(&problem), max_evals_(max_evals) {}

  /// Cached or fresh evaluation; nullptr when a miss would exceed the budget.
  /// The pointer stays valid for the lifetime of the oracle.
  const Evaluation* evaluate(const MixedPoint& x);

  const ProblemSpec& problem() const noexcept { return *problem_; }
  std::size_t calls() const noexcept { return calls_; }
  std::size_t misses() const noexcept { return misses_; }
  std::size_t hits() const noexcept { return calls_ - misses_ - refused_; }
  std::size_t refused() const noexcept { return refused_; }
  std::size_t max_evals() const noexcept { return max_evals_; }
  std::size_t remaining() const noexcept { return max_evals_ - misses_; }
  bool exhausted() const noexcept { return misses_ >= max_evals_; }

  /// Raises or lowers the miss budget; never below what was already used.
  void set_max_evals(std::size_t max_evals) { max_evals_ = std::max(max_evals, misses_); }

 private:
  const ProblemSpec* problem_;
  std::size_t max_evals_;
  std::size_t calls_ = 0;
  std::size_t misses_ = 0;
  std::size_t refused_ = 0;
  std::unordered_map<MixedPoint, Evaluation, MixedPointHash> cache_;
};

}  // namespace dfmo
