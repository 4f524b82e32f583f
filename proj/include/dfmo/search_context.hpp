#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dfmo/front_list.hpp"
#include "dfmo/oracle.hpp"

namespace dfmo {

/// Something a linesearch did, in order. `step` is the stepsize that produced
/// `point` (trial, accept) or the stepsize value written back (reduce).
struct TraceEvent {
  enum class Kind { trial, accept, reduce };
  Kind kind;
  std::vector<double> point;
  double step = 0.0;
};

using TraceSink = std::function<void(const TraceEvent&)>;

/// An evaluated trial point.
struct Trial {
  MixedPoint x;
  const Evaluation* eval = nullptr;
  ObjectiveVector z;
};

/// What the linesearches share within one run: the oracle, eps and an
/// optional trace sink.
class SearchContext {
 public:
  SearchContext(Oracle& oracle, double eps, TraceSink trace = {})
      : oracle_(&oracle), eps_(eps), trace_(std::move(trace)) {}

  const ProblemSpec& problem() const noexcept { return oracle_->problem(); }
  Oracle& oracle() noexcept { return *oracle_; }
  double eps() const noexcept { return eps_; }

  /// Evaluates x (cached). nullopt when the budget is spent.
  std::optional<Trial> evaluate(MixedPoint x, double step);

  /// A list entry for an evaluated trial, inheriting the rest of the tuple
  /// from `parent`.
  static FrontEntry child_of(const FrontEntry& parent, const Trial& t);

  void emit(TraceEvent::Kind kind, const MixedPoint& x, double step) const;

 private:
  Oracle* oracle_;
  double eps_;
  TraceSink trace_;
};

/// Outcome of one linesearch call. The list is updated in place either way.
struct SearchOutcome {
  bool failed = false;     // the immediate-failure branch fired
  bool exhausted = false;  // stopped because the budget ran out
};

/// z_i - reference_i > -margin for every i.
bool beaten_everywhere(std::span<const double> z, std::span<const double> reference,
                       double margin);

/// z_i - reference_i < -margin for every i.
bool below_everywhere(std::span<const double> z, std::span<const double> reference,
                      double margin);

}  // namespace dfmo
