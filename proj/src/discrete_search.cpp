#include "dfmo/discrete_search.hpp"

#include <algorithm>

namespace dfmo {

SearchOutcome discrete_search(FrontEntry entry, const PrimitiveDirection& p,
                              FrontList& list, SearchContext& ctx) {
  const ProblemSpec& problem = ctx.problem();
  const std::int64_t abar = max_feasible_step(entry.x, p, problem.box(), problem.partition());

  auto trial_at = [&](std::int64_t step) {
    MixedPoint x = entry.x;
    for (std::size_t k = 0; k < x.integer.size(); ++k) x.integer[k] += step * p.components[k];
    return ctx.evaluate(std::move(x), static_cast<double>(step));
  };
  auto fail = [&]() -> SearchOutcome {
    FrontEntry halved = entry;
    halved.set_step(p.id, std::max<std::int64_t>(1, entry.step(p.id) / 2));
    if (!halved.same_tuple(entry) && list.replace_entry(entry, halved)) {
      ctx.emit(TraceEvent::Kind::reduce, entry.x, static_cast<double>(halved.step(p.id)));
    }
    return {.failed = true};
  };

  std::int64_t alpha = std::min(abar, entry.step(p.id));
  if (alpha == 0) return fail();

  auto trial_alpha = trial_at(alpha);
  if (!trial_alpha) return {.exhausted = true};
  if (beaten_everywhere(trial_alpha->z, entry.z, entry.xi)) return fail();

  std::int64_t beta = 0;
  std::optional<Trial> trial_beta;
  for (;;) {
    beta = std::min(abar, 2 * alpha);
    trial_beta = trial_at(beta);
    if (!trial_beta) return {.exhausted = true};

    if (!below_everywhere(trial_beta->z, trial_alpha->z, entry.xi)) {
      FrontEntry child = SearchContext::child_of(entry, *trial_alpha);
      child.set_step(p.id, alpha);
      ctx.emit(TraceEvent::Kind::accept, child.x, static_cast<double>(alpha));
      list.add_and_filter(std::move(child));
    }

    if (beta < abar && !list.any_beats_by_margin(trial_beta->z, entry.xi)) {
      alpha = beta;
      trial_alpha = std::move(trial_beta);
      continue;
    }
    break;
  }

  if (beta == abar) {
    FrontEntry child = SearchContext::child_of(entry, *trial_beta);
    child.set_step(p.id, beta);
    ctx.emit(TraceEvent::Kind::accept, child.x, static_cast<double>(beta));
    list.add_and_filter(std::move(child));
  }
  return {};
}

}  // namespace dfmo
