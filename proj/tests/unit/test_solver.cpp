#include <doctest.h>

#include <algorithm>
#include <set>

#include "dfmo/solver.hpp"
#include "dfmo/suite.hpp"

using namespace dfmo;

namespace {

std::set<ObjectiveVector> front_values(const FrontList& list) {
  std::set<ObjectiveVector> out;
  for (const ReportedPoint& p : final_front(list)) out.insert(p.f);
  return out;
}

}  // namespace

TEST_CASE("a zero budget returns an empty list") {
  SolverConfig cfg;
  cfg.max_evals = 0;
  const RunRecord rec = solve(integer_grid_problem().spec, cfg);
  CHECK(rec.list.empty());
  CHECK(rec.evaluations_used == 0);
  CHECK(rec.termination == Termination::budget);
}

TEST_CASE("the budget bounds fresh evaluations") {
  const ProblemSpec p = mixed_convex_problem().spec;
  for (std::size_t budget : {1u, 2u, 17u, 300u}) {
    SolverConfig cfg;
    cfg.max_evals = budget;
    const RunRecord rec = solve(p, cfg);
    CHECK(rec.evaluations_used <= budget);
    CHECK(rec.evaluations_used + rec.cache_hits <= rec.black_box_calls);
    CHECK_FALSE(rec.list.empty());
  }
}

TEST_CASE("integer grid front equals the enumerated nondominated set") {
  const OracleProblem grid = integer_grid_problem();
  SolverConfig cfg;
  const RunRecord rec = solve(grid.spec, cfg);
  const auto reference = grid.reference_front();
  CHECK(front_values(rec.list) == std::set<ObjectiveVector>(reference.begin(), reference.end()));
  CHECK(final_front(rec.list).size() == 121);
}

TEST_CASE("runs are deterministic") {
  SolverConfig cfg;
  cfg.max_evals = 2000;
  const RunRecord a = solve(constrained_mixed_problem().spec, cfg);
  const RunRecord b = solve(constrained_mixed_problem().spec, cfg);
  CHECK(lists_equal(a.list, b.list, ListComparison::tuples));
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("xi only ever shrinks by theta") {
  SolverConfig cfg;
  cfg.max_evals = 5000;
  cfg.expansion.theta = 0.25;
  cfg.xi0 = 2.0;
  const RunRecord rec = solve(integer_grid_problem().spec, cfg);
  for (const FrontEntry& e : rec.list.entries()) {
    REQUIRE_FALSE(e.xi_history.empty());
    CHECK(e.xi_history.front() == 2.0);
    CHECK(e.xi_history.back() == e.xi);
    double expected = 2.0;
    for (double v : e.xi_history) {
      CHECK(v == expected);
      expected *= 0.25;
    }
  }
}

TEST_CASE("initial points go through Add&Filter") {
  SolverConfig cfg;
  cfg.max_evals = 2;
  cfg.initial_points = {MixedPoint{{0.0}, {5, 5}}, MixedPoint{{0.0}, {0, 0}}};
  // (0,0,0) has f = (0, 20), (0,5,5) has f = (10, 10): incomparable.
  const RunRecord rec = solve(integer_grid_problem().spec, cfg);
  CHECK(rec.list.size() == 2);
  CHECK(rec.evaluations_used == 2);

  cfg.initial_points = {MixedPoint{{0.0}, {50, 5}}};
  CHECK_THROWS_AS(solve(integer_grid_problem().spec, cfg), UsageError);
}

TEST_CASE("eps schedule warm-starts and shares the budget") {
  SolverConfig cfg;
  cfg.max_evals = 3000;
  const RunRecord rec = solve_with_eps_schedule(constrained_mixed_problem().spec, cfg);
  CHECK(rec.evaluations_used <= 3000);
  CHECK(rec.eps == 1e-5);
  CHECK_FALSE(rec.list.empty());
  CHECK_THROWS_AS(solve_with_eps_schedule(constrained_mixed_problem().spec, cfg, {}), UsageError);
}

TEST_CASE("configuration checks") {
  SolverConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.eps = 0.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.xi0 = -1.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.max_idle_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = {};
  cfg.expansion.delta = 2.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("termination names") {
  CHECK(termination_name(Termination::budget) == "budget");
  CHECK(termination_name(Termination::stepsize_floor) == "stepsize-floor");
  CHECK(termination_name(Termination::directions_exhausted_xi_floor) ==
        "direction-set-exhausted-and-xi-floor");
  CHECK(termination_name(Termination::stalled) == "stalled");
}
