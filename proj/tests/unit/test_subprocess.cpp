#include <doctest.h>

#include "dfmo/solver.hpp"
#include "dfmo/subprocess_problem.hpp"

using namespace dfmo;

namespace {

// A python child that answers each input line with reply(x, z).
SubprocessProblemDescription python_problem(const std::string& reply, std::size_t m) {
  SubprocessProblemDescription d;
  d.name = "python";
  d.command = {"python3", "-u", "-c",
               "import sys\n"
               "while True:\n"
               "    line = sys.stdin.readline()\n"
               "    if not line:\n"
               "        break\n"
               "    x, z = map(float, line.split())\n" +
                   reply};
  d.q = 2;
  d.m = m;
  d.lower = {-1.0, 0.0};
  d.upper = {1.0, 10.0};
  d.integer_indices = {1};
  return d;
}

}  // namespace

TEST_CASE("reply parsing") {
  const Evaluation e = parse_reply("1.5 -2;0.25", 2, 1);
  CHECK(e.f == ObjectiveVector{1.5, -2.0});
  CHECK(e.g == std::vector<double>{0.25});
  CHECK(parse_reply("1 2", 2, 0).g.empty());
  CHECK(parse_reply("  1   2 ; ", 2, 0).f.size() == 2);
  CHECK_THROWS_AS(parse_reply("1;0", 2, 1), EvaluationError);
  CHECK_THROWS_AS(parse_reply("1 x", 2, 0), EvaluationError);
  CHECK_THROWS_AS(parse_reply("1 2", 2, 1), EvaluationError);
}

TEST_CASE("description parsing") {
  const auto d = parse_subprocess_description(nlohmann::json::parse(R"({
    "name": "toy", "command": ["python3", "toy.py"], "q": 2, "m": 1,
    "lower": [0, 0], "upper": [1, 5], "integer_indices": [1]
  })"));
  CHECK(d.name == "toy");
  CHECK(d.command == std::vector<std::string>{"python3", "toy.py"});
  CHECK(d.m == 1);
  CHECK(d.integer_indices == std::vector<std::size_t>{1});
  CHECK_THROWS_WITH_AS(parse_subprocess_description(nlohmann::json::parse(R"({"command": ["a"], "extra": 1})")),
                       doctest::Contains("'extra'"), UsageError);
  CHECK_THROWS_AS(parse_subprocess_description(nlohmann::json::parse(R"({"command": []})")), UsageError);
  CHECK_THROWS_AS(parse_subprocess_description(nlohmann::json::parse("[]")), UsageError);
}

TEST_CASE("a child process serves evaluations") {
  const ProblemSpec p = subprocess_problem(python_problem(
      "    print(repr(z + x * x), repr(20 - z + x * x) + ';' + repr(z - 8))\n", 1));
  CHECK(p.num_objectives() == 2);
  const Evaluation e = p.evaluate(MixedPoint{{0.5}, {3}});
  CHECK(e.f == ObjectiveVector{3.25, 17.25});
  CHECK(e.g == std::vector<double>{-5.0});

  SolverConfig cfg;
  cfg.max_evals = 300;
  const RunRecord rec = solve(p, cfg);
  CHECK(rec.evaluations_used <= 300);
  CHECK_FALSE(rec.list.empty());
}

TEST_CASE("a misbehaving child raises evaluation errors") {
  const ProblemSpec wrong = subprocess_problem(python_problem("    print('1')\n", 0));
  CHECK_THROWS_AS(wrong.evaluate(MixedPoint{{0.0}, {1}}), EvaluationError);

  const ProblemSpec silent = subprocess_problem(python_problem("    break\n", 0));
  CHECK_THROWS_AS(silent.evaluate(MixedPoint{{0.0}, {1}}), EvaluationError);
}
