#include "dfmo/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <optional>
#include <set>

#include "dfmo/kernels.hpp"

namespace dfmo::metrics {

namespace {

// Sorted values of objective j with both extremes inserted.
std::vector<double> padded_column(const Front& front, const Extremes& extremes, std::size_t j) {
  std::vector<double> col;
  col.reserve(front.size() + 2);
  col.push_back(extremes.lower[j]);
  for (const ObjectiveVector& v : front) col.push_back(v[j]);
  col.push_back(extremes.upper[j]);
  std::sort(col.begin(), col.end());
  return col;
}

void require_objectives(const Front& front, const Extremes& extremes) {
  for (const ObjectiveVector& v : front) {
    if (v.size() != extremes.lower.size()) {
      throw UsageError("front and reference extremes differ in objective count");
    }
  }
}

}  // namespace

Front nondominated(const Front& points) {
  if (points.empty()) return {};
  const std::size_t q = points.front().size();
  for (const ObjectiveVector& p : points) {
    if (p.size() != q) throw UsageError("points differ in objective count");
  }
  // A point can only be dominated by one that precedes it lexicographically,
  // and dominance is transitive, so checking against the survivors so far in
  // lexicographic order is enough.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<std::uint8_t> keep(points.size(), 0);
  kernels::ObjectiveMatrix survivors(q);
  for (std::size_t idx : order) {
    if (kernels::any_dominates(survivors.block(), points[idx])) continue;
    keep[idx] = 1;
    survivors.push_back(points[idx]);
  }
  Front out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) out.push_back(points[i]);
  }
  return out;
}

Front reference_front(std::span<const Front> fronts) {
  std::set<ObjectiveVector> unique;
  for (const Front& f : fronts) unique.insert(f.begin(), f.end());
  return nondominated(Front(unique.begin(), unique.end()));
}

double canonical(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  double out = v;
  std::from_chars(buf, end, out);
  return out == 0.0 ? 0.0 : out;
}

ObjectiveVector canonical(const ObjectiveVector& v) {
  ObjectiveVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return canonical(x); });
  return out;
}

double purity(const Front& front, const Front& reference) {
  if (front.empty()) return kFailure;
  std::set<ObjectiveVector> ref;
  for (const ObjectiveVector& r : reference) ref.insert(canonical(r));
  std::size_t hits = 0;
  for (const ObjectiveVector& v : front) hits += ref.contains(canonical(v)) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(front.size());
}

Extremes extremes_of(const Front& reference) {
  if (reference.empty()) throw UsageError("extremes of an empty reference front");
  Extremes e{reference.front(), reference.front()};
  for (const ObjectiveVector& v : reference) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      e.lower[j] = std::min(e.lower[j], v[j]);
      e.upper[j] = std::max(e.upper[j], v[j]);
    }
  }
  return e;
}

double gamma_spread(const Front& front, const Extremes& extremes) {
  if (front.empty()) return kFailure;
  require_objectives(front, extremes);
  double gamma = 0.0;
  for (std::size_t j = 0; j < extremes.lower.size(); ++j) {
    const std::vector<double> col = padded_column(front, extremes, j);
    for (std::size_t i = 0; i + 1 < col.size(); ++i) gamma = std::max(gamma, col[i + 1] - col[i]);
  }
  return gamma;
}

double delta_spread(const Front& front, const Extremes& extremes) {
  if (front.empty()) return kFailure;
  require_objectives(front, extremes);
  const std::size_t n = front.size();
  double delta = 0.0;
  for (std::size_t j = 0; j < extremes.lower.size(); ++j) {
    const std::vector<double> col = padded_column(front, extremes, j);
    // col has n + 2 values and n + 1 gaps d_0..d_n.
    std::vector<double> gaps(n + 1);
    for (std::size_t i = 0; i <= n; ++i) gaps[i] = col[i + 1] - col[i];
    const double ends = gaps.front() + gaps.back();
    double mean = 0.0;
    for (std::size_t i = 1; i < n; ++i) mean += gaps[i];
    if (n > 1) mean /= static_cast<double>(n - 1);
    double dev = 0.0;
    for (std::size_t i = 1; i < n; ++i) dev += std::abs(gaps[i] - mean);
    const double denom = ends + static_cast<double>(n - 1) * mean;
    delta = std::max(delta, denom > 0.0 ? (ends + dev) / denom : 0.0);
  }
  return delta;
}

double ProfileTable::rho(std::size_t solver, double tau) const {
  if (ratios.empty()) return 0.0;
  std::size_t count = 0;
  for (const auto& row : ratios) count += row[solver] <= tau ? 1 : 0;
  return static_cast<double>(count) / static_cast<double>(ratios.size());
}

std::vector<double> ProfileTable::breakpoints() const {
  std::set<double> taus;
  for (const auto& row : ratios) {
    for (double r : row) {
      if (std::isfinite(r)) taus.insert(r);
    }
  }
  return {taus.begin(), taus.end()};
}

ProfileTable performance_profile(const std::vector<std::vector<double>>& values,
                                 std::vector<std::string> solvers,
                                 std::vector<std::string> problems, bool higher_is_better) {
  if (values.size() != problems.size()) throw UsageError("one value row per problem expected");
  if (solvers.empty()) throw UsageError("performance profile needs at least one solver");

  ProfileTable t;
  t.solvers = std::move(solvers);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < values.size(); ++p) {
    const auto& row = values[p];
    if (row.size() != t.solvers.size()) throw UsageError("value row has the wrong length");
    std::optional<double> best;
    for (double v : row) {
      if (std::isnan(v)) continue;
      if (!best || (higher_is_better ? v > *best : v < *best)) best = v;
    }
    if (!best) {
      t.dropped.push_back(problems[p]);
      continue;
    }
    std::vector<double> r(row.size());
    for (std::size_t s = 0; s < row.size(); ++s) {
      const double v = row[s];
      if (std::isnan(v)) {
        r[s] = kInf;
      } else if (v == *best) {
        r[s] = 1.0;
      } else if (higher_is_better) {
        r[s] = v > 0.0 ? *best / v : kInf;
      } else {
        r[s] = *best > 0.0 ? v / *best : kInf;
      }
    }
    t.ratios.push_back(std::move(r));
    t.problems.push_back(problems[p]);
  }
  return t;
}

}  // namespace dfmo::metrics
