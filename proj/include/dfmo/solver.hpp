#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dfmo/continuous_search.hpp"
#include "dfmo/discrete_search.hpp"
#include "dfmo/front_list.hpp"

namespace dfmo {

struct SolverConfig {
  double eps = 1e-3;
  ExpansionParams expansion;  // gamma, delta, theta (theta is also the xi factor)
  double xi0 = 1.0;
  std::size_t max_evals = 20000;

  /// L_0. Empty means the box centroid.
  std::vector<MixedPoint> initial_points;

  /// Retry along -s_k when the +s_k expansion fails immediately.
  bool opposite_direction = true;
  /// Emit +-e_i of every continuous coordinate before the dense stream.
  bool coordinate_directions_first = false;

  /// Entries whose alpha^c is at or below this skip the continuous phase.
  double min_alpha_c = 1e-12;
  /// The run stops once every xi is below this (with the other floors).
  double xi_floor = 1e-8;
  /// Cap on directions added per enrichment; 0 adds whole sup-norm shells.
  std::size_t max_new_directions = 256;
  /// The run stops as stalled after this many consecutive iterations without
  /// a fresh evaluation.
  std::size_t max_idle_iterations = 10000;

  void validate() const;
};

enum class Termination {
  budget,
  stepsize_floor,
  directions_exhausted_xi_floor,
  stalled,
};

std::string_view termination_name(Termination t);

struct RunRecord {
  std::size_t evaluations_used = 0;  // cache misses
  std::size_t black_box_calls = 0;   // cached or not
  std::size_t cache_hits = 0;
  std::size_t iterations = 0;
  std::size_t directions = 0;        // |D_k| at the end
  std::int64_t direction_level = 0;
  double eps = 0.0;
  Termination termination = Termination::budget;
  FrontList list;

  RunRecord(double eps, std::size_t q) : eps(eps), list(eps, q) {}
};

/// Runs the derivative-free mixed-integer multiobjective method on `problem`
/// with a fixed penalty parameter.
RunRecord solve(const ProblemSpec& problem, const SolverConfig& config);

/// Same, but sharing an evaluation cache with previous runs.
RunRecord solve(Oracle& oracle, const SolverConfig& config);

/// Reruns solve over a decreasing eps list, warm-starting each run from the
/// previous list. The budget is shared: stage i gets an equal share of what is
/// left. Evaluations are cached across stages (F and g do not depend on eps).
RunRecord solve_with_eps_schedule(const ProblemSpec& problem, const SolverConfig& config,
                                  const std::vector<double>& schedule = {1e-1, 1e-3, 1e-5});

}  // namespace dfmo
