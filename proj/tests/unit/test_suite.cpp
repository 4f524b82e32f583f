#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "dfmo/suite.hpp"

using namespace dfmo;

namespace {

struct UfSample {
  int id;
  int k;
  std::vector<double> f;
};

// Frozen from tests/oracles/uf_reference.py at n = 10.
const std::vector<UfSample> kUfSamples = {
    {1, 0, {1.6795738093334132, 1.4886746604681356}},
    {1, 1, {2.0306968107402947, 2.6043653663798025}},
    {1, 2, {1.696079974037564, 2.494977117891997}},
    {1, 3, {2.365828906281621, 1.3865300176495972}},
    {1, 4, {2.2561651777211935, 1.6783881410695272}},
    {2, 0, {1.4655573365343912, 0.8349637896316588}},
    {2, 1, {1.9832530680014524, 1.2338176302343764}},
    {2, 2, {0.6404032492922707, 1.6270496131108272}},
    {2, 3, {0.7727484377611071, 0.9231972258075763}},
    {2, 4, {1.4622822489678673, 0.9092738936841932}},
    {3, 0, {2.5327221995688545, 2.0565072562276727}},
    {3, 1, {2.503912886968255, 1.7930347660028878}},
    {3, 2, {3.431915392533334, 4.306591479006929}},
    {3, 3, {2.2140493351603228, 2.7171701535970056}},
    {3, 4, {2.0092196898219035, 2.2463447997053736}},
    {4, 0, {0.6085207778415029, 1.0274263936891113}},
    {4, 1, {0.8758939296785523, 0.6499987612790186}},
    {4, 2, {0.2004129155583858, 1.1476251269230549}},
    {4, 3, {0.43437526818223005, 1.1021813680070744}},
    {4, 4, {0.7460772599251531, 0.8252374362696753}},
    {5, 0, {4.884357482871222, 5.4228089708036125}},
    {5, 1, {5.093348755956646, 7.687756488977776}},
    {5, 2, {5.040644020787245, 5.5576714600512584}},
    {5, 3, {6.724328471979992, 3.891123019550038}},
    {5, 4, {6.134441008629384, 6.083338973115768}},
    {6, 0, {6.680248854535278, 6.0302932202087245}},
    {6, 1, {7.324750105449411, 11.575744009870897}},
    {6, 2, {7.9606757472191685, 8.25700725840533}},
    {6, 3, {9.932463646135664, 5.706768074396857}},
    {6, 4, {9.082328018683878, 7.643697784453989}},
    {7, 0, {2.095469470127352, 1.2989960890260417}},
    {7, 1, {2.2478475359589027, 2.5161533181891977}},
    {7, 2, {2.0841871445910614, 2.1968699473385}},
    {7, 3, {2.8513552966599853, 1.148638296245041}},
    {7, 4, {2.5646250033020035, 1.547343677955571}},
    {8, 0, {4.504803331562184, 9.432069090495945, 2.458300181526799}},
    {8, 1, {0.5903454900939298, 0.9814668229005773, 8.115181079747458}},
    {8, 2, {2.7022198407334144, 3.1857333314758005, 2.8245943338334887}},
    {8, 3, {2.2198221401473135, 3.376352233021634, 4.645075982718234}},
    {8, 4, {0.6610156801901831, 0.6693266658391701, 6.578912549759156}},
    {9, 0, {4.53763385817075, 9.433483499396727, 2.2705124010386863}},
    {9, 1, {1.2195203857044778, 0.9152042589874929, 7.355023955839019}},
    {9, 2, {1.7303507287932254, 3.102430961933488, 3.6618870165216677}},
    {9, 3, {1.7521605938797904, 3.205440342534183, 4.751686453867115}},
    {9, 4, {1.192333267615439, 0.7688650134042281, 6.04834556488828}},
    {10, 0, {20.087994441694278, 37.900334093605366, 11.195161063493972}},
    {10, 1, {5.193780208639809, 5.137033646324332, 30.96404632359198}},
    {10, 2, {10.34147061122909, 13.327234422742016, 13.77443215670847}},
    {10, 3, {8.66510255161054, 15.19083814148473, 17.96842206543972}},
    {10, 4, {3.725723393973758, 1.559780000408682, 26.300008951332348}},
};

// Box of UF`id` as published, written out independently of make_uf.
std::pair<std::vector<double>, std::vector<double>> published_bounds(int id, std::size_t n) {
  if (id == 3) return {std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
  std::vector<double> lo(n), up(n);
  const std::size_t head = id >= 8 ? 2 : 1;
  const double wide = (id == 4 || id >= 8) ? 2.0 : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = i < head ? 0.0 : -wide;
    up[i] = i < head ? 1.0 : wide;
  }
  return {lo, up};
}

std::vector<double> sample(int id, std::size_t n, int k) {
  const auto [lo, up] = published_bounds(id, n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::fmod((static_cast<double>(i) + 1) * 0.137 + (k + 1) * 0.291, 1.0);
    x[i] = lo[i] + t * (up[i] - lo[i]);
  }
  return x;
}

}  // namespace

TEST_CASE("UF objectives match an independent transcription") {
  for (const UfSample& s : kUfSamples) {
    CAPTURE(s.id);
    CAPTURE(s.k);
    const ContinuousProblem p = make_uf(s.id, 10);
    const auto [lo, up] = published_bounds(s.id, 10);
    CHECK(p.lower == lo);
    CHECK(p.upper == up);
    CHECK(p.q == uf_objectives(s.id));
    const ObjectiveVector f = p.objectives(sample(s.id, 10, s.k));
    REQUIRE(f.size() == s.f.size());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == doctest::Approx(s.f[i]).epsilon(1e-12));
  }
}

TEST_CASE("UF1 on its Pareto set lies on f2 = 1 - sqrt(f1)") {
  const std::size_t n = 10;
  const ContinuousProblem p = make_uf(1, n);
  for (double x1 : {0.0, 0.1, 0.37, 0.64, 1.0}) {
    std::vector<double> x(n);
    x[0] = x1;
    for (std::size_t j = 2; j <= n; ++j) {
      x[j - 1] = std::sin(6.0 * std::numbers::pi * x1 + static_cast<double>(j) * std::numbers::pi / n);
    }
    const ObjectiveVector f = p.objectives(x);
    CHECK(f[0] == doctest::Approx(x1).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(1.0 - std::sqrt(x1)).epsilon(1e-12));
  }
}

TEST_CASE("UF ids are checked") {
  CHECK_THROWS_AS(make_uf(11, 10), UsageError);
  CHECK_THROWS_AS(make_uf(0, 10), UsageError);
}

TEST_CASE("discretization maps codes onto the original range") {
  ContinuousProblem base{"lin", 1, {-1, -1, -1, -1}, {1, 1, 1, 1},
                         [](std::span<const double> v) { return ObjectiveVector{v[3]}; }};
  const DiscretizedProblem d = discretize(base);
  CHECK(d.n_continuous == 2);
  CHECK(d.partition().is_integer(2));
  CHECK(d.box().upper[3] == 100.0);
  const std::vector<double> mid{0.5, 0.5, 50.0, 50.0};
  CHECK(d.decode(mid)[3] == 0.0);
  const std::vector<double> ends{0.5, 0.5, 0.0, 100.0};
  CHECK(d.decode(ends)[2] == -1.0);
  CHECK(d.decode(ends)[3] == 1.0);
  CHECK(d.decode(ends)[0] == 0.5);
}

TEST_CASE("constraint families at the origin") {
  const std::vector<double> zero(10, 0.0);
  for (double g : constraint_values(1, zero)) CHECK(g == 1.0);
  for (double g : constraint_values(4, zero)) CHECK(g == -1.0);
  for (int family = 1; family <= 6; ++family) {
    CHECK(constraint_values(family, zero).size() == constraint_count(family, 10));
  }
  CHECK(constraint_count(1, 10) == 8);
  CHECK(constraint_count(3, 10) == 9);
  CHECK(constraint_count(6, 10) == 1);
  CHECK_THROWS_AS(constraint_count(7, 10), UsageError);
}

TEST_CASE("suite enumeration and ids") {
  const auto all = enumerate_suite();
  CHECK(all.size() == 350);
  CHECK(std::count_if(all.begin(), all.end(), [](const SuiteInstance& s) { return !s.constrained(); }) == 50);
  CHECK(filter_suite("q=2, bound").size() == 35);
  CHECK(filter_suite("constrained").size() == 300);
  CHECK(filter_suite("UF3,n=20").size() == 7);
  CHECK(filter_suite("all").size() == 350);
  CHECK_THROWS_AS(filter_suite("color=red"), UsageError);
  CHECK_THROWS_AS(filter_suite("nonsense"), UsageError);

  const auto inst = parse_instance_id("UF3-n20-fam4");
  REQUIRE(inst.has_value());
  CHECK(inst->uf == 3);
  CHECK(inst->n == 20);
  CHECK(inst->family == 4);
  CHECK(inst->id() == "UF3-n20-fam4");
  CHECK(parse_instance_id("UF3-n21")->n == 21);
  CHECK_FALSE(parse_instance_id("UF3-n2").has_value());
  CHECK_FALSE(parse_instance_id("UF3n20").has_value());
  CHECK_FALSE(parse_instance_id("UF11-n10").has_value());
  CHECK_FALSE(parse_instance_id("UF1-n10-fam0").has_value());

  const ProblemSpec spec = inst->build();
  CHECK(spec.num_constraints() == 19);
  CHECK(spec.dimension() == 20);
  CHECK(spec.partition().integer().size() == 10);
}

TEST_CASE("oracle problems") {
  const auto problems = analytic_oracle_problems();
  REQUIRE(problems.size() == 3);
  // Every grid point with x = 0 is nondominated; 21 distinct vectors.
  const auto grid = problems[0].reference_front();
  CHECK(grid.size() == 121);
  CHECK(std::set<ObjectiveVector>(grid.begin(), grid.end()).size() == 21);
  for (const auto& f : problems[2].reference_front()) CHECK(f.size() == 2);
}
