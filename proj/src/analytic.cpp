// Small problems with nondominated sets known by enumeration. The reference
// generators enumerate every integer slice against a fine continuous grid.

#include "dfmo/metrics.hpp"
#include "dfmo/suite.hpp"

namespace dfmo {

namespace {

constexpr std::size_t kGridSteps = 2000;

struct MixedConvex {
  double operator()(double x, double z, int which) const {
    return which == 0 ? (x - 0.25) * (x - 0.25) + z : (x - 0.75) * (x - 0.75) + (3.0 - z);
  }
};

double cut(double x, double z) { return x + 0.25 * z - 0.9; }

}  // namespace

OracleProblem integer_grid_problem() {
  BlackBox bb = [](std::span<const double> v) {
    const double x2 = v[0] * v[0];
    return Evaluation{{v[1] + v[2] + x2, (10.0 - v[1]) + (10.0 - v[2]) + x2}, {}};
  };
  ProblemSpec spec("integer-grid", IndexPartition(3, {1, 2}), Box{{-1.0, 0.0, 0.0}, {1.0, 10.0, 10.0}},
                   2, 0, std::move(bb));
  auto reference = [spec]() {
    metrics::Front all;
    for (std::size_t i = 0; i <= kGridSteps; ++i) {
      const double x = -1.0 + 2.0 * static_cast<double>(i) / kGridSteps;
      for (int a = 0; a <= 10; ++a) {
        for (int b = 0; b <= 10; ++b) {
          const double xs[] = {x, static_cast<double>(a), static_cast<double>(b)};
          all.push_back(spec.black_box()(xs).f);
        }
      }
    }
    return metrics::nondominated(all);
  };
  return {"integer-grid", spec, reference};
}

OracleProblem mixed_convex_problem() {
  BlackBox bb = [](std::span<const double> v) {
    MixedConvex f;
    return Evaluation{{f(v[0], v[1], 0), f(v[0], v[1], 1)}, {}};
  };
  ProblemSpec spec("mixed-convex", IndexPartition(2, {1}), Box{{0.0, 0.0}, {1.0, 3.0}}, 2, 0,
                   std::move(bb));
  auto reference = []() {
    MixedConvex f;
    metrics::Front all;
    for (int z = 0; z <= 3; ++z) {
      for (std::size_t i = 0; i <= kGridSteps; ++i) {
        const double x = static_cast<double>(i) / kGridSteps;
        all.push_back({f(x, z, 0), f(x, z, 1)});
      }
    }
    return metrics::nondominated(all);
  };
  return {"mixed-convex", spec, reference};
}

OracleProblem constrained_mixed_problem() {
  BlackBox bb = [](std::span<const double> v) {
    MixedConvex f;
    return Evaluation{{f(v[0], v[1], 0), f(v[0], v[1], 1)}, {cut(v[0], v[1])}};
  };
  ProblemSpec spec("constrained-mixed", IndexPartition(2, {1}), Box{{0.0, 0.0}, {1.0, 3.0}}, 2, 1,
                   std::move(bb));
  auto reference = []() {
    MixedConvex f;
    metrics::Front all;
    for (int z = 0; z <= 3; ++z) {
      for (std::size_t i = 0; i <= kGridSteps; ++i) {
        const double x = static_cast<double>(i) / kGridSteps;
        if (cut(x, z) > 0.0) continue;
        all.push_back({f(x, z, 0), f(x, z, 1)});
      }
    }
    return metrics::nondominated(all);
  };
  return {"constrained-mixed", spec, reference};
}

std::vector<OracleProblem> analytic_oracle_problems() {
  return {integer_grid_problem(), mixed_convex_problem(), constrained_mixed_problem()};
}

}  // namespace dfmo
