#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dfmo/model.hpp"

namespace dfmo {

/// A box-constrained continuous problem with deterministic objectives.
struct ContinuousProblem {
  std::string name;
  std::size_t q = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::function<ObjectiveVector(std::span<const double>)> objectives;

  std::size_t dimension() const noexcept { return lower.size(); }
};

/// CEC 2009 UF1..UF10 at dimension n (n >= 3), with the published bounds.
/// UF1-UF7 have two objectives, UF8-UF10 three.
ContinuousProblem make_uf(int id, std::size_t n);

/// Objective count of UF`id`.
std::size_t uf_objectives(int id);

/// The first floor(n/2) variables stay continuous; the remaining ones become
/// integers in [0,100] mapped affinely onto their original range.
struct DiscretizedProblem {
  ContinuousProblem base;
  std::size_t n_continuous = 0;

  IndexPartition partition() const;
  Box box() const;
  /// x~ from the mixed coordinates x.
  std::vector<double> decode(std::span<const double> x) const;
  ProblemSpec spec() const;
};

DiscretizedProblem discretize(ContinuousProblem base);

/// Constraint family 1..6 evaluated at x~ (0-based: g_j uses x~_j, x~_{j+1},
/// x~_{j+2}).
std::vector<double> constraint_values(int family, std::span<const double> x);
std::size_t constraint_count(int family, std::size_t n);

/// The discretized problem with family `family` constraints evaluated on x~.
ProblemSpec attach_constraints(const DiscretizedProblem& problem, int family);

struct SuiteInstance {
  int uf = 1;
  std::size_t n = 10;
  int family = 0;  // 0 = bound constrained

  std::size_t q() const { return uf_objectives(uf); }
  std::size_t n_continuous() const { return n / 2; }
  std::size_t n_integer() const { return n - n / 2; }
  std::size_t m() const { return family == 0 ? 0 : constraint_count(family, n); }
  bool constrained() const { return family != 0; }

  /// "UF3-n20" or "UF3-n20-fam4".
  std::string id() const;
  ProblemSpec build() const;

  bool operator==(const SuiteInstance&) const = default;
};

std::optional<SuiteInstance> parse_instance_id(std::string_view id);

/// The 50 bound-constrained instances followed by the 300 constrained ones.
std::vector<SuiteInstance> enumerate_suite();

/// Comma-separated terms, all of which must hold: "q=2", "n=10", "uf=3" (or
/// "UF3"), "fam=4", "bound", "constrained", "all". Throws UsageError on an
/// unknown term.
std::vector<SuiteInstance> filter_suite(std::string_view filter);

/// Desk-scale problems whose nondominated sets are known by enumeration.
struct OracleProblem {
  std::string name;
  ProblemSpec spec;
  /// Objective vectors of the (feasible) nondominated set, by enumeration.
  std::function<std::vector<ObjectiveVector>()> reference_front;
};

/// f1 = z1 + z2 + x^2, f2 = (10 - z1) + (10 - z2) + x^2 on x in [-1,1],
/// z in {0..10}^2.
OracleProblem integer_grid_problem();
/// f1 = (x - 0.25)^2 + z, f2 = (x - 0.75)^2 + (3 - z), x in [0,1], z in {0..3}.
OracleProblem mixed_convex_problem();
/// mixed_convex_problem with g = x + z / 4 - 0.9 <= 0.
OracleProblem constrained_mixed_problem();

std::vector<OracleProblem> analytic_oracle_problems();

}  // namespace dfmo
