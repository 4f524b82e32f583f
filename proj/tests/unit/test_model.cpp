#include <doctest.h>

#include <cmath>
#include <limits>

#include "dfmo/model.hpp"

using namespace dfmo;

namespace {

ProblemSpec two_constraint_problem(ObjectiveVector f, std::vector<double> g) {
  BlackBox bb = [f, g](std::span<const double>) { return Evaluation{f, g}; };
  return ProblemSpec("fixed", IndexPartition(2, {1}), Box{{0.0, 0.0}, {1.0, 1.0}}, f.size(),
                     g.size(), std::move(bb));
}

const MixedPoint kOrigin{{0.0}, {0}};

}  // namespace

TEST_CASE("dominance relations") {
  using V = std::vector<double>;
  CHECK(dominates(V{1, 2}, V{1, 3}));
  CHECK_FALSE(dominates(V{1, 2}, V{1, 2}));
  CHECK_FALSE(dominates(V{1, 2}, V{2, 1}));

  CHECK(strictly_less(V{0, 0}, V{1, 1}));
  CHECK_FALSE(strictly_less(V{0, 2}, V{1, 2}));
  CHECK_FALSE(strictly_less(V{1, 1}, V{1, 1}));
}

TEST_CASE("penalty values add the scaled violation to every objective") {
  CHECK(penalty_values(two_constraint_problem({1, 2}, {-1, -2}), kOrigin, 0.1) ==
        ObjectiveVector{1, 2});
  const ObjectiveVector z = penalty_values(two_constraint_problem({1, 2}, {0.5, -1}), kOrigin, 0.1);
  CHECK(z[0] == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(z[1] == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(penalty_values(two_constraint_problem({0, 0}, {0}), kOrigin, 1e-7) == ObjectiveVector{0, 0});
  CHECK_THROWS_AS(penalty_values(two_constraint_problem({0, 0}, {0}), kOrigin, 0.0), UsageError);
}

TEST_CASE("violation sums positive parts") {
  CHECK(violation(two_constraint_problem({0}, {-1, -2}), kOrigin) == 0.0);
  CHECK(violation(two_constraint_problem({0}, {0.5, -1}), kOrigin) == 0.5);
  CHECK(violation(two_constraint_problem({0}, {0.2, 0.3}), kOrigin) == doctest::Approx(0.5));
}

TEST_CASE("projection onto the box") {
  const IndexPartition mixed(2, {1});
  const Box box{{0.0, 0.0}, {3.0, 3.0}};
  const std::vector<double> out{-1.0, 5.0};
  CHECK(project_to_box(out, box, mixed) == MixedPoint{{0.0}, {3}});
  const std::vector<double> in{1.5, 2.0};
  CHECK(project_to_box(in, box, mixed) == MixedPoint{{1.5}, {2}});

  const IndexPartition first_integer(2, {0});
  const std::vector<double> x{2.0, 0.5};
  CHECK(project_to_box(x, Box{{0.0, 0.0}, {1.0, 1.0}}, first_integer) == MixedPoint{{0.5}, {1}});
}

TEST_CASE("index partition and box validation") {
  CHECK_THROWS_AS(IndexPartition(2, {}), UsageError);
  CHECK_THROWS_AS(IndexPartition(2, {0, 1}), UsageError);
  CHECK_THROWS_AS(IndexPartition(2, {2}), UsageError);
  CHECK_THROWS_AS(IndexPartition(3, {1, 1}), UsageError);

  const IndexPartition p = IndexPartition::trailing_integers(5, 2);
  CHECK(std::vector<std::size_t>(p.continuous().begin(), p.continuous().end()) ==
        std::vector<std::size_t>{0, 1, 2});
  CHECK(p.is_integer(4));

  CHECK_THROWS_AS((Box{{0.0, 0.0}, {1.0, 0.5}}.validate(IndexPartition(2, {1}))), UsageError);
  CHECK_THROWS_AS((Box{{0.0, 0.5}, {1.0, 2.0}}.validate(IndexPartition(2, {1}))), UsageError);
  CHECK_THROWS_AS((Box{{1.0, 0.0}, {1.0, 2.0}}.validate(IndexPartition(2, {1}))), UsageError);
}

TEST_CASE("mixed points round-trip through dense coordinates") {
  const IndexPartition p(4, {0, 2});
  const MixedPoint x{{0.25, -1.5}, {3, -7}};
  const std::vector<double> dense = x.dense(p);
  CHECK(dense == std::vector<double>{3.0, 0.25, -7.0, -1.5});
  CHECK(MixedPoint::from_dense(dense, p) == x);
  const std::vector<double> fractional{3.5, 0.0, 1.0, 0.0};
  CHECK_THROWS_AS(MixedPoint::from_dense(fractional, p), UsageError);
  CHECK(MixedPointHash{}(x) == MixedPointHash{}(MixedPoint::from_dense(dense, p)));
}

TEST_CASE("centroid rounds integer coordinates down") {
  const Box box{{-1.0, 0.0, 0.0}, {1.0, 10.0, 3.0}};
  CHECK(centroid(box, IndexPartition(3, {1, 2})) == MixedPoint{{0.0}, {5, 1}});
}

TEST_CASE("evaluation checks arity and finiteness") {
  const IndexPartition p(2, {1});
  const Box box{{0.0, 0.0}, {1.0, 1.0}};
  ProblemSpec short_f("short", p, box, 2, 0,
                      [](std::span<const double>) { return Evaluation{{1.0}, {}}; });
  CHECK_THROWS_AS(short_f.evaluate(kOrigin), EvaluationError);

  ProblemSpec short_g("short-g", p, box, 1, 2,
                      [](std::span<const double>) { return Evaluation{{1.0}, {0.0}}; });
  CHECK_THROWS_AS(short_g.evaluate(kOrigin), EvaluationError);

  ProblemSpec nan("nan", p, box, 1, 0, [](std::span<const double>) {
    return Evaluation{{std::numeric_limits<double>::quiet_NaN()}, {}};
  });
  try {
    nan.evaluate(MixedPoint{{0.5}, {1}});
    FAIL("expected an EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.point() == std::vector<double>{0.5, 1.0});
  }

  CHECK_THROWS_AS(ProblemSpec("none", p, box, 0, 0, short_f.black_box()), UsageError);
  CHECK(short_f.contains(MixedPoint{{1.0}, {1}}));
  CHECK_FALSE(short_f.contains(MixedPoint{{1.5}, {1}}));
}
