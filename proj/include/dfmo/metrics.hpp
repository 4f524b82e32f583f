#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "dfmo/model.hpp"

namespace dfmo::metrics {

using Front = std::vector<ObjectiveVector>;

/// Points of `points` not dominated by any other point of `points`. Equal
/// vectors do not dominate each other, so duplicates survive together.
Front nondominated(const Front& points);

/// Nondominated filter of the union of several fronts, duplicates removed.
Front reference_front(std::span<const Front> fronts);

/// Rounds to 12 significant digits so values read back from different
/// serializations compare equal.
double canonical(double v);
ObjectiveVector canonical(const ObjectiveVector& v);

/// Fraction of `front` found in `reference` (exact match). NaN for an empty
/// front.
double purity(const Front& front, const Front& reference);

/// Per-objective extremes of a reference front.
struct Extremes {
  ObjectiveVector lower;
  ObjectiveVector upper;
};
Extremes extremes_of(const Front& reference);

/// Largest gap between consecutive values along any objective, with the
/// reference extremes added at both ends. NaN for an empty front.
double gamma_spread(const Front& front, const Extremes& extremes);

/// Max over objectives of
///   (d_0 + d_N + sum_{i=1}^{N-1} |d_i - mean|) / (d_0 + d_N + (N - 1) mean)
/// with d_0, d_N the gaps to the extremes and mean the mean interior gap.
/// A zero denominator yields 0. NaN for an empty front.
double delta_spread(const Front& front, const Extremes& extremes);

/// Dolan-More profile over a problems x solvers matrix of metric values.
struct ProfileTable {
  std::vector<std::string> solvers;
  std::vector<std::string> problems;        // kept problems, in input order
  std::vector<std::string> dropped;         // problems where every solver failed
  std::vector<std::vector<double>> ratios;  // [problem][solver], >= 1, inf on failure

  /// Fraction of kept problems with ratio <= tau.
  double rho(std::size_t solver, double tau) const;
  /// Sorted distinct finite ratios (always containing 1 when any problem is kept).
  std::vector<double> breakpoints() const;
};

inline constexpr double kFailure = std::numeric_limits<double>::quiet_NaN();

/// values[p][s] is the metric of solver s on problem p; NaN marks a failure.
/// For higher-is-better metrics r = best / value, otherwise r = value / best;
/// a zero value that is not the best, or a failure, gets +inf.
ProfileTable performance_profile(const std::vector<std::vector<double>>& values,
                                 std::vector<std::string> solvers,
                                 std::vector<std::string> problems, bool higher_is_better);

}  // namespace dfmo::metrics
