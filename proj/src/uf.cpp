// CEC 2009 unconstrained multiobjective test functions UF1-UF10.
//
// Coordinates are 1-based in the formulas below (x_1 = x[0]). For UF1-UF7,
// J1 holds the odd and J2 the even indices in 2..n. For UF8-UF10, J1/J2/J3
// hold the j in 3..n with j-1, j-2, j divisible by 3. An empty index set
// contributes zero.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dfmo/suite.hpp"

namespace dfmo {

namespace {

constexpr double kPi = std::numbers::pi;

// 2/|J| * sum_{j in J} term(j), where J = {j in [first, n] : j % modulus == residue}.
template <class Term>
double scaled_sum(std::size_t n, std::size_t first, std::size_t modulus, std::size_t residue,
                  Term term) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t j = first; j <= n; ++j) {
    if (j % modulus != residue) continue;
    sum += term(j);
    ++count;
  }
  return count == 0 ? 0.0 : 2.0 * sum / static_cast<double>(count);
}

// 2/|J| * (4 sum y_j^2 - 2 prod cos(20 y_j pi / sqrt(j)) + 2).
template <class Y>
double rastrigin_like(std::size_t n, std::size_t residue, Y y) {
  double sq = 0.0;
  double prod = 1.0;
  std::size_t count = 0;
  for (std::size_t j = 2; j <= n; ++j) {
    if (j % 2 != residue) continue;
    const double v = y(j);
    sq += v * v;
    prod *= std::cos(20.0 * v * kPi / std::sqrt(static_cast<double>(j)));
    ++count;
  }
  return count == 0 ? 0.0 : 2.0 / static_cast<double>(count) * (4.0 * sq - 2.0 * prod + 2.0);
}

ObjectiveVector uf1(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  auto term = [&](std::size_t j) {
    const double y = x[j - 1] - std::sin(6.0 * kPi * x1 + j * kPi / n);
    return y * y;
  };
  return {x1 + scaled_sum(n, 2, 2, 1, term), 1.0 - std::sqrt(x1) + scaled_sum(n, 2, 2, 0, term)};
}

ObjectiveVector uf2(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  auto term = [&](std::size_t j) {
    const double amp = 0.3 * x1 * x1 * std::cos(24.0 * kPi * x1 + 4.0 * j * kPi / n) + 0.6 * x1;
    const double phase = 6.0 * kPi * x1 + j * kPi / n;
    const double y = x[j - 1] - amp * (j % 2 == 1 ? std::cos(phase) : std::sin(phase));
    return y * y;
  };
  return {x1 + scaled_sum(n, 2, 2, 1, term), 1.0 - std::sqrt(x1) + scaled_sum(n, 2, 2, 0, term)};
}

ObjectiveVector uf3(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  auto y = [&](std::size_t j) {
    const double e = 0.5 * (1.0 + 3.0 * (static_cast<double>(j) - 2.0) / (static_cast<double>(n) - 2.0));
    return x[j - 1] - std::pow(x1, e);
  };
  return {x1 + rastrigin_like(n, 1, y), 1.0 - std::sqrt(x1) + rastrigin_like(n, 0, y)};
}

ObjectiveVector uf4(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  auto term = [&](std::size_t j) {
    const double t = std::abs(x[j - 1] - std::sin(6.0 * kPi * x1 + j * kPi / n));
    return t / (1.0 + std::exp(2.0 * t));
  };
  return {x1 + scaled_sum(n, 2, 2, 1, term), 1.0 - x1 * x1 + scaled_sum(n, 2, 2, 0, term)};
}

ObjectiveVector uf5(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  constexpr double kN = 10.0;
  constexpr double kEps = 0.1;
  auto term = [&](std::size_t j) {
    const double t = x[j - 1] - std::sin(6.0 * kPi * x1 + j * kPi / n);
    return 2.0 * t * t - std::cos(4.0 * kPi * t) + 1.0;
  };
  const double h = (0.5 / kN + kEps) * std::abs(std::sin(2.0 * kN * kPi * x1));
  return {x1 + h + scaled_sum(n, 2, 2, 1, term), 1.0 - x1 + h + scaled_sum(n, 2, 2, 0, term)};
}

ObjectiveVector uf6(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  constexpr double kN = 2.0;
  constexpr double kEps = 0.1;
  auto y = [&](std::size_t j) { return x[j - 1] - std::sin(6.0 * kPi * x1 + j * kPi / n); };
  const double h = std::max(0.0, 2.0 * (0.5 / kN + kEps) * std::sin(2.0 * kN * kPi * x1));
  return {x1 + h + rastrigin_like(n, 1, y), 1.0 - x1 + h + rastrigin_like(n, 0, y)};
}

ObjectiveVector uf7(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  auto term = [&](std::size_t j) {
    const double y = x[j - 1] - std::sin(6.0 * kPi * x1 + j * kPi / n);
    return y * y;
  };
  const double r = std::pow(x1, 0.2);
  return {r + scaled_sum(n, 2, 2, 1, term), 1.0 - r + scaled_sum(n, 2, 2, 0, term)};
}

// y_j = x_j - 2 x_2 sin(2 pi x_1 + j pi / n), shared by UF8-UF10.
double tri_y(std::span<const double> x, std::size_t j) {
  const std::size_t n = x.size();
  return x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + j * kPi / n);
}

ObjectiveVector uf8(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  const double x2 = x[1];
  auto sq = [&](std::size_t j) {
    const double y = tri_y(x, j);
    return y * y;
  };
  return {std::cos(0.5 * x1 * kPi) * std::cos(0.5 * x2 * kPi) + scaled_sum(n, 3, 3, 1, sq),
          std::cos(0.5 * x1 * kPi) * std::sin(0.5 * x2 * kPi) + scaled_sum(n, 3, 3, 2, sq),
          std::sin(0.5 * x1 * kPi) + scaled_sum(n, 3, 3, 0, sq)};
}

ObjectiveVector uf9(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  const double x2 = x[1];
  constexpr double kEps = 0.1;
  auto sq = [&](std::size_t j) {
    const double y = tri_y(x, j);
    return y * y;
  };
  const double t = 2.0 * x1 - 1.0;
  const double a = std::max(0.0, (1.0 + kEps) * (1.0 - 4.0 * t * t));
  return {0.5 * (a + 2.0 * x1) * x2 + scaled_sum(n, 3, 3, 1, sq),
          0.5 * (a - 2.0 * x1 + 2.0) * x2 + scaled_sum(n, 3, 3, 2, sq),
          1.0 - x2 + scaled_sum(n, 3, 3, 0, sq)};
}

ObjectiveVector uf10(std::span<const double> x) {
  const std::size_t n = x.size();
  const double x1 = x[0];
  const double x2 = x[1];
  auto h = [&](std::size_t j) {
    const double y = tri_y(x, j);
    return 4.0 * y * y - std::cos(8.0 * kPi * y) + 1.0;
  };
  return {std::cos(0.5 * x1 * kPi) * std::cos(0.5 * x2 * kPi) + scaled_sum(n, 3, 3, 1, h),
          std::cos(0.5 * x1 * kPi) * std::sin(0.5 * x2 * kPi) + scaled_sum(n, 3, 3, 2, h),
          std::sin(0.5 * x1 * kPi) + scaled_sum(n, 3, 3, 0, h)};
}

}  // namespace

std::size_t uf_objectives(int id) {
  if (id < 1 || id > 10) throw UsageError("unknown UF problem id " + std::to_string(id));
  return id <= 7 ? 2 : 3;
}

ContinuousProblem make_uf(int id, std::size_t n) {
  const std::size_t q = uf_objectives(id);
  if (n < 3) throw UsageError("UF problems need n >= 3");

  ContinuousProblem p;
  p.name = "UF" + std::to_string(id);
  p.q = q;
  p.lower.assign(n, 0.0);
  p.upper.assign(n, 1.0);
  switch (id) {
    case 1:
    case 2:
    case 5:
    case 6:
    case 7:
      std::fill(p.lower.begin() + 1, p.lower.end(), -1.0);
      break;
    case 3:
      break;
    case 4:
      std::fill(p.lower.begin() + 1, p.lower.end(), -2.0);
      std::fill(p.upper.begin() + 1, p.upper.end(), 2.0);
      break;
    default:
      std::fill(p.lower.begin() + 2, p.lower.end(), -2.0);
      std::fill(p.upper.begin() + 2, p.upper.end(), 2.0);
      break;
  }

  using Fn = ObjectiveVector (*)(std::span<const double>);
  static constexpr Fn kTable[] = {uf1, uf2, uf3, uf4, uf5, uf6, uf7, uf8, uf9, uf10};
  p.objectives = kTable[id - 1];
  return p;
}

}  // namespace dfmo
