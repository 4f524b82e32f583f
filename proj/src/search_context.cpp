#include "dfmo/search_context.hpp"

namespace dfmo {

std::optional<Trial> SearchContext::evaluate(MixedPoint x, double step) {
  const Evaluation* e = oracle_->evaluate(x);
  if (e == nullptr) return std::nullopt;
  emit(TraceEvent::Kind::trial, x, step);
  Trial t{std::move(x), e, penalty_values(*e, eps_)};
  return t;
}

FrontEntry SearchContext::child_of(const FrontEntry& parent, const Trial& t) {
  FrontEntry child;
  child.x = t.x;
  child.alpha_c = parent.alpha_c;
  child.alpha_d = parent.alpha_d;
  child.xi = parent.xi;
  child.z = t.z;
  child.f = t.eval->f;
  child.violation = violation(t.eval->g);
  child.xi_history = parent.xi_history;
  return child;
}

void SearchContext::emit(TraceEvent::Kind kind, const MixedPoint& x, double step) const {
  if (!trace_) return;
  trace_(TraceEvent{kind, x.dense(problem().partition()), step});
}

bool beaten_everywhere(std::span<const double> z, std::span<const double> reference,
                       double margin) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!(z[i] - reference[i] > -margin)) return false;
  }
  return true;
}

bool below_everywhere(std::span<const double> z, std::span<const double> reference,
                      double margin) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!(z[i] - reference[i] < -margin)) return false;
  }
  return true;
}

}  // namespace dfmo
