#include "dfmo/solver.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_set>

namespace dfmo {

void SolverConfig::validate() const {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  expansion.validate();
  if (!(xi0 > 0.0)) throw UsageError("xi0 must be positive");
  if (!(min_alpha_c > 0.0)) throw UsageError("min_alpha_c must be positive");
  if (!(xi_floor > 0.0)) throw UsageError("xi_floor must be positive");
  if (max_idle_iterations == 0) throw UsageError("max_idle_iterations must be positive");
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::budget:
      return "budget";
    case Termination::stepsize_floor:
      return "stepsize-floor";
    case Termination::directions_exhausted_xi_floor:
      return "direction-set-exhausted-and-xi-floor";
    case Termination::stalled:
      return "stalled";
  }
  return "unknown";
}

namespace {

using PointSet = std::unordered_set<MixedPoint, MixedPointHash>;

bool all_unit_steps(const FrontEntry& e, std::size_t num_directions) {
  for (std::size_t d = 0; d < num_directions; ++d) {
    if (e.step(d) != 1) return false;
  }
  return true;
}

bool at_floors(const FrontList& list, const SolverConfig& config, std::size_t num_directions) {
  return std::all_of(list.entries().begin(), list.entries().end(), [&](const FrontEntry& e) {
    return e.alpha_c <= config.min_alpha_c && e.xi < config.xi_floor &&
           all_unit_steps(e, num_directions);
  });
}

std::vector<double> negated(std::vector<double> v) {
  for (double& c : v) c = -c;
  return v;
}

// One run of the main loop. Returns false when the budget stopped it.
class MainLoop {
 public:
  MainLoop(Oracle& oracle, const SolverConfig& config, RunRecord& record)
      : problem_(oracle.problem()),
        config_(config),
        record_(record),
        ctx_(oracle, config.eps),
        directions_(initial_directions(problem_.partition(), problem_.box())),
        sequence_(problem_.partition(), config.coordinate_directions_first) {}

  bool seed() {
    std::vector<MixedPoint> points = config_.initial_points;
    if (points.empty()) points.push_back(centroid(problem_.box(), problem_.partition()));
    for (const MixedPoint& p : points) {
      if (!problem_.contains(p)) throw UsageError("initial point outside the box");
      const Evaluation* e = ctx_.oracle().evaluate(p);
      if (e == nullptr) return false;
      FrontEntry entry;
      entry.x = p;
      entry.alpha_c = 1.0;
      entry.alpha_d.assign(directions_.size(), 1);
      entry.xi = config_.xi0;
      entry.z = penalty_values(*e, config_.eps);
      entry.f = e->f;
      entry.violation = violation(e->g);
      entry.xi_history = {config_.xi0};
      record_.list.add_and_filter(std::move(entry));
    }
    return true;
  }

  // One iteration k. Returns false when the budget ran out.
  bool iterate() {
    const FrontList start = record_.list;
    FrontList working = start;

    // Continuous phase.
    const std::vector<double> s = sequence_.next();
    const std::vector<double> minus_s = negated(s);
    for (const FrontEntry& e : start.entries()) {
      if (e.alpha_c <= config_.min_alpha_c) continue;
      SearchOutcome out = projected_expansion(e, s, working, config_.expansion, ctx_);
      if (out.exhausted) return finish(working);
      if (out.failed && config_.opposite_direction) {
        out = projected_expansion(e, minus_s, working, config_.expansion, ctx_);
        if (out.exhausted) return finish(working);
      }
    }

    // Discrete phase.
    const FrontList after_continuous = working;
    PointSet reduced;
    for (const FrontEntry& ec : after_continuous.entries()) {
      const PointSnapshot before = working.snapshot_points();
      for (const PrimitiveDirection& d : directions_.directions()) {
        if (!working.same_points(before)) break;
        const FrontEntry* live = working.find(ec.x);
        const SearchOutcome out = discrete_search(live ? *live : ec, d, working, ctx_);
        if (out.exhausted) return finish(working);
      }
      if (!working.same_points(before)) continue;
      const FrontEntry* live = working.find(ec.x);
      if (live == nullptr || !all_unit_steps(*live, directions_.size())) continue;
      reduced.insert(ec.x);
      // Below the smallest normal double a further reduction would reach zero.
      if (config_.expansion.theta * live->xi < std::numeric_limits<double>::min()) continue;
      FrontEntry shrunk = *live;
      shrunk.xi = config_.expansion.theta * live->xi;
      shrunk.xi_history.push_back(shrunk.xi);
      const FrontEntry old = *live;
      working.replace_entry(old, std::move(shrunk));
    }

    // Direction set update.
    const bool all_reduced =
        std::all_of(working.entries().begin(), working.entries().end(),
                    [&](const FrontEntry& e) { return reduced.contains(e.x); });
    if (all_reduced && lists_equal(after_continuous, working, ListComparison::points)) {
      const std::size_t before = directions_.size();
      if (directions_.enrich(config_.max_new_directions) > 0) {
        working.reset_steps(before, directions_.size());
      }
    }

    record_.list = std::move(working);
    ++record_.iterations;
    last_start_ = start;
    return true;
  }

  const FrontList& previous() const { return last_start_; }
  const DirectionSet& directions() const { return directions_; }

 private:
  bool finish(FrontList& working) {
    record_.list = std::move(working);
    return false;
  }

  const ProblemSpec& problem_;
  const SolverConfig& config_;
  RunRecord& record_;
  SearchContext ctx_;
  DirectionSet directions_;
  DirectionSequence sequence_;
  FrontList last_start_{1.0, 1};
};

}  // namespace

RunRecord solve(Oracle& oracle, const SolverConfig& config) {
  config.validate();
  const ProblemSpec& problem = oracle.problem();
  const std::size_t misses0 = oracle.misses();
  const std::size_t calls0 = oracle.calls();
  const std::size_t hits0 = oracle.hits();
  oracle.set_max_evals(misses0 + config.max_evals);

  RunRecord record(config.eps, problem.num_objectives());
  MainLoop loop(oracle, config, record);

  if (!loop.seed()) {
    record.termination = Termination::budget;
  } else {
    std::size_t idle = 0;
    for (;;) {
      const std::size_t misses_before = oracle.misses();
      if (!loop.iterate()) {
        record.termination = Termination::budget;
        break;
      }
      const std::size_t nd = loop.directions().size();
      if (at_floors(record.list, config, nd)) {
        record.termination = loop.directions().at_cap()
                                 ? Termination::directions_exhausted_xi_floor
                                 : Termination::stepsize_floor;
        break;
      }
      idle = oracle.misses() == misses_before ? idle + 1 : 0;
      if (idle >= config.max_idle_iterations ||
          (idle > 0 && lists_equal(record.list, loop.previous(), ListComparison::tuples))) {
        record.termination = Termination::stalled;
        break;
      }
    }
  }

  record.evaluations_used = oracle.misses() - misses0;
  record.black_box_calls = oracle.calls() - calls0;
  record.cache_hits = oracle.hits() - hits0;
  record.directions = loop.directions().size();
  record.direction_level = loop.directions().level();
  return record;
}

RunRecord solve(const ProblemSpec& problem, const SolverConfig& config) {
  Oracle oracle(problem, config.max_evals);
  return solve(oracle, config);
}

RunRecord solve_with_eps_schedule(const ProblemSpec& problem, const SolverConfig& config,
                                  const std::vector<double>& schedule) {
  if (schedule.empty()) throw UsageError("eps schedule is empty");
  Oracle oracle(problem, config.max_evals);

  SolverConfig stage = config;
  std::size_t used = 0;
  std::size_t calls = 0;
  std::size_t hits = 0;
  std::size_t iterations = 0;
  std::optional<RunRecord> last;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    stage.eps = schedule[i];
    stage.max_evals = (config.max_evals - used) / (schedule.size() - i);
    if (last) {
      stage.initial_points.clear();
      for (const FrontEntry& e : last->list.entries()) stage.initial_points.push_back(e.x);
    }
    RunRecord r = solve(oracle, stage);
    used += r.evaluations_used;
    calls += r.black_box_calls;
    hits += r.cache_hits;
    iterations += r.iterations;
    // An empty warm start would reseed from the centroid; keep the last list.
    if (r.list.empty() && last) break;
    last = std::move(r);
  }
  last->evaluations_used = used;
  last->black_box_calls = calls;
  last->cache_hits = hits;
  last->iterations = iterations;
  return std::move(*last);
}

}  // namespace dfmo
