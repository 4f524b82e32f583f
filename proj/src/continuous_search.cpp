#include "dfmo/continuous_search.hpp"

namespace dfmo {

void ExpansionParams::validate() const {
  if (!(gamma > 0.0)) throw UsageError("gamma must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0,1)");
  if (!(theta > 0.0 && theta < 1.0)) throw UsageError("theta must lie in (0,1)");
}

SearchOutcome projected_expansion(FrontEntry entry, std::span<const double> direction,
                                  FrontList& list, const ExpansionParams& params,
                                  SearchContext& ctx) {
  const ProblemSpec& problem = ctx.problem();
  const std::vector<double> y = entry.x.dense(problem.partition());
  if (direction.size() != y.size()) throw UsageError("direction has the wrong dimension");

  std::vector<double> scratch(y.size());
  auto trial_at = [&](double step) {
    for (std::size_t i = 0; i < y.size(); ++i) scratch[i] = y[i] + step * direction[i];
    return ctx.evaluate(project_to_box(scratch, problem.box(), problem.partition()), step);
  };

  double alpha = entry.alpha_c;
  auto trial_alpha = trial_at(alpha);
  if (!trial_alpha) return {.exhausted = true};

  if (list.any_beats_by_margin(trial_alpha->z, params.gamma * alpha * alpha)) {
    FrontEntry shrunk = entry;
    shrunk.alpha_c = params.theta * entry.alpha_c;
    if (list.replace_entry(entry, shrunk)) {
      ctx.emit(TraceEvent::Kind::reduce, entry.x, shrunk.alpha_c);
    }
    return {.failed = true};
  }

  for (;;) {
    const double beta = alpha / params.delta;
    auto trial_beta = trial_at(beta);
    if (!trial_beta) return {.exhausted = true};

    if (!below_everywhere(trial_beta->z, trial_alpha->z,
                          params.gamma * (beta * beta - alpha * alpha))) {
      FrontEntry child = SearchContext::child_of(entry, *trial_alpha);
      child.alpha_c = alpha;
      ctx.emit(TraceEvent::Kind::accept, child.x, alpha);
      list.add_and_filter(std::move(child));
    }

    if (list.any_beats_by_margin(trial_beta->z, params.gamma * beta * beta)) return {};
    alpha = beta;
    trial_alpha = std::move(trial_beta);
  }
}

}  // namespace dfmo
