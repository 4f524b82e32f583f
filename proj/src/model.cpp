#include "dfmo/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace dfmo {

namespace {

void require_same_length(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    std::ostringstream os;
    os << "objective vectors differ in length (" << u.size() << " vs " << v.size() << ")";
    throw UsageError(os.str());
  }
}

bool is_integral(double v) { return std::isfinite(v) && std::floor(v) == v; }

// -0.0 and 0.0 compare equal, so they must also hash and store equally.
double canonical_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

IndexPartition::IndexPartition(std::size_t n, std::vector<std::size_t> integer_indices)
    : n_(n), integer_(std::move(integer_indices)), is_integer_(n, false) {
  std::sort(integer_.begin(), integer_.end());
  if (std::adjacent_find(integer_.begin(), integer_.end()) != integer_.end()) {
    throw UsageError("integer index listed twice");
  }
  for (std::size_t i : integer_) {
    if (i >= n) throw UsageError("integer index " + std::to_string(i) + " out of range");
    is_integer_[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integer_[i]) continuous_.push_back(i);
  }
  if (continuous_.empty() || integer_.empty()) {
    throw UsageError("both the continuous and the integer index sets must be nonempty");
  }
}

IndexPartition IndexPartition::trailing_integers(std::size_t n, std::size_t n_int) {
  if (n_int > n) throw UsageError("more integer variables than variables");
  std::vector<std::size_t> idx;
  for (std::size_t i = n - n_int; i < n; ++i) idx.push_back(i);
  return IndexPartition(n, std::move(idx));
}

void Box::validate(const IndexPartition& partition) const {
  if (lower.size() != partition.size() || upper.size() != partition.size()) {
    throw UsageError("box bounds do not match the problem dimension");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(std::isfinite(lower[i]) && std::isfinite(upper[i]) && lower[i] < upper[i])) {
      throw UsageError("bounds of coordinate " + std::to_string(i) + " must satisfy l < u");
    }
  }
  for (std::size_t i : partition.integer()) {
    if (!is_integral(lower[i]) || !is_integral(upper[i])) {
      throw UsageError("bounds of integer coordinate " + std::to_string(i) +
                       " must be integral");
    }
  }
}

std::vector<double> MixedPoint::dense(const IndexPartition& partition) const {
  std::vector<double> out(partition.size());
  dense_into(partition, out);
  return out;
}

void MixedPoint::dense_into(const IndexPartition& partition, std::span<double> out) const {
  auto c = partition.continuous();
  auto z = partition.integer();
  for (std::size_t k = 0; k < c.size(); ++k) out[c[k]] = continuous[k];
  for (std::size_t k = 0; k < z.size(); ++k) out[z[k]] = static_cast<double>(integer[k]);
}

MixedPoint MixedPoint::from_dense(std::span<const double> x, const IndexPartition& partition) {
  if (x.size() != partition.size()) throw UsageError("point has the wrong dimension");
  MixedPoint p;
  p.continuous.reserve(partition.continuous().size());
  p.integer.reserve(partition.integer().size());
  for (std::size_t i : partition.continuous()) p.continuous.push_back(canonical_zero(x[i]));
  for (std::size_t i : partition.integer()) {
    if (!is_integral(x[i])) {
      throw UsageError("coordinate " + std::to_string(i) + " is integer but holds a fraction");
    }
    p.integer.push_back(static_cast<std::int64_t>(x[i]));
  }
  return p;
}

std::size_t MixedPointHash::operator()(const MixedPoint& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (double v : p.continuous) mix(std::bit_cast<std::uint64_t>(canonical_zero(v)));
  for (std::int64_t v : p.integer) mix(static_cast<std::uint64_t>(v));
  return static_cast<std::size_t>(h);
}

ProblemSpec::ProblemSpec(std::string name, IndexPartition partition, Box box, std::size_t q,
                         std::size_t m, BlackBox black_box)
    : name_(std::move(name)),
      partition_(std::move(partition)),
      box_(std::move(box)),
      q_(q),
      m_(m),
      black_box_(std::move(black_box)) {
  box_.validate(partition_);
  if (q_ == 0) throw UsageError("a problem needs at least one objective");
  if (!black_box_) throw UsageError("problem '" + name_ + "' has no black box");
}

Evaluation ProblemSpec::evaluate(const MixedPoint& x) const {
  return evaluate_dense(x.dense(partition_));
}

Evaluation ProblemSpec::evaluate_dense(std::span<const double> x) const {
  Evaluation e = black_box_(x);
  std::vector<double> point(x.begin(), x.end());
  if (e.f.size() != q_) {
    throw EvaluationError(name_ + ": black box returned " + std::to_string(e.f.size()) +
                              " objectives, expected " + std::to_string(q_),
                          std::move(point));
  }
  if (e.g.size() != m_) {
    throw EvaluationError(name_ + ": black box returned " + std::to_string(e.g.size()) +
                              " constraints, expected " + std::to_string(m_),
                          std::move(point));
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(e.f.begin(), e.f.end(), finite) ||
      !std::all_of(e.g.begin(), e.g.end(), finite)) {
    throw EvaluationError(name_ + ": black box returned a non-finite value", std::move(point));
  }
  return e;
}

bool ProblemSpec::contains(const MixedPoint& x) const {
  auto c = partition_.continuous();
  auto z = partition_.integer();
  if (x.continuous.size() != c.size() || x.integer.size() != z.size()) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (x.continuous[k] < box_.lower[c[k]] || x.continuous[k] > box_.upper[c[k]]) return false;
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    auto v = static_cast<double>(x.integer[k]);
    if (v < box_.lower[z[k]] || v > box_.upper[z[k]]) return false;
  }
  return true;
}

bool dominates(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v);
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    if (u[i] < v[i]) strict = true;
  }
  return strict;
}

bool strictly_less(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] < v[i])) return false;
  }
  return true;
}

double violation(std::span<const double> g) {
  double s = 0.0;
  for (double v : g) s += std::max(0.0, v);
  return s;
}

double violation(const ProblemSpec& problem, const MixedPoint& x) {
  return violation(problem.evaluate(x).g);
}

ObjectiveVector penalty_values(const Evaluation& e, double eps) {
  if (!(eps > 0.0)) throw UsageError("penalty parameter eps must be positive");
  const double term = violation(e.g) / eps;
  ObjectiveVector z(e.f);
  for (double& v : z) v += term;
  return z;
}

ObjectiveVector penalty_values(const ProblemSpec& problem, const MixedPoint& x, double eps) {
  return penalty_values(problem.evaluate(x), eps);
}

MixedPoint project_to_box(std::span<const double> x, const Box& box,
                          const IndexPartition& partition) {
  if (x.size() != box.size() || x.size() != partition.size()) {
    throw UsageError("projection: point, box and partition dimensions differ");
  }
  std::vector<double> clamped(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    clamped[i] = std::clamp(x[i], box.lower[i], box.upper[i]);
  }
  for (std::size_t i : partition.integer()) {
    if (!is_integral(x[i])) {
      throw UsageError("projection: integer coordinate " + std::to_string(i) +
                       " is not integral");
    }
  }
  return MixedPoint::from_dense(clamped, partition);
}

MixedPoint centroid(const Box& box, const IndexPartition& partition) {
  std::vector<double> mid(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) mid[i] = 0.5 * (box.lower[i] + box.upper[i]);
  for (std::size_t i : partition.integer()) mid[i] = std::floor(mid[i]);
  return MixedPoint::from_dense(mid, partition);
}

}  // namespace dfmo
