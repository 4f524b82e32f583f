#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfmo {

/// Raised for malformed input: shape mismatches, invalid parameters, bad ids.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a black box returns something unusable (wrong arity, NaN, inf).
/// Carries the dense point that was being evaluated.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

using ObjectiveVector = std::vector<double>;

/// Split of {0..n-1} into continuous and integer coordinates. Both parts are
/// nonempty and disjoint; indices are kept sorted.
class IndexPartition {
 public:
  IndexPartition(std::size_t n, std::vector<std::size_t> integer_indices);

  /// The first n - n_int coordinates continuous, the rest integer.
  static IndexPartition trailing_integers(std::size_t n, std::size_t n_int);

  std::size_t size() const noexcept { return n_; }
  std::span<const std::size_t> continuous() const noexcept { return continuous_; }
  std::span<const std::size_t> integer() const noexcept { return integer_; }
  bool is_integer(std::size_t i) const { return is_integer_.at(i); }

  bool operator==(const IndexPartition&) const = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> continuous_;
  std::vector<std::size_t> integer_;
  std::vector<bool> is_integer_;
};

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const noexcept { return lower.size(); }
  /// Throws UsageError unless l_i < u_i everywhere and integer bounds are integral.
  void validate(const IndexPartition& partition) const;
};

/// A point of X ∩ Z. Integer coordinates are held as exact integers and only
/// widened to double by dense().
struct MixedPoint {
  std::vector<double> continuous;
  std::vector<std::int64_t> integer;

  bool operator==(const MixedPoint&) const = default;

  std::vector<double> dense(const IndexPartition& partition) const;
  void dense_into(const IndexPartition& partition, std::span<double> out) const;

  /// Throws UsageError if an integer coordinate is not integral.
  static MixedPoint from_dense(std::span<const double> x, const IndexPartition& partition);
};

struct MixedPointHash {
  std::size_t operator()(const MixedPoint& p) const noexcept;
};

/// What one black-box call returns: objectives F(x) and constraints g(x).
struct Evaluation {
  ObjectiveVector f;
  std::vector<double> g;
};

using BlackBox = std::function<Evaluation(std::span<const double>)>;

/// A mixed-integer, box-bounded problem with m >= 0 inequality constraints
/// g(x) <= 0. The black box receives dense coordinates.
class ProblemSpec {
 public:
  ProblemSpec(std::string name, IndexPartition partition, Box box, std::size_t q,
              std::size_t m, BlackBox black_box);

  const std::string& name() const noexcept { return name_; }
  const IndexPartition& partition() const noexcept { return partition_; }
  const Box& box() const noexcept { return box_; }
  std::size_t dimension() const noexcept { return partition_.size(); }
  std::size_t num_objectives() const noexcept { return q_; }
  std::size_t num_constraints() const noexcept { return m_; }
  const BlackBox& black_box() const noexcept { return black_box_; }

  /// Calls the black box and checks arity and finiteness.
  Evaluation evaluate(const MixedPoint& x) const;
  Evaluation evaluate_dense(std::span<const double> x) const;

  bool contains(const MixedPoint& x) const;

 private:
  std::string name_;
  IndexPartition partition_;
  Box box_;
  std::size_t q_;
  std::size_t m_;
  BlackBox black_box_;
};

/// u dominates v: u_i <= v_i for all i and u != v.
bool dominates(std::span<const double> u, std::span<const double> v);

/// u_i < v_i for every i.
bool strictly_less(std::span<const double> u, std::span<const double> v);

/// Sum of positive constraint parts.
double violation(std::span<const double> g);
double violation(const ProblemSpec& problem, const MixedPoint& x);

/// Z(x; eps) = F(x) + violation(x) / eps, the same term on every objective.
ObjectiveVector penalty_values(const Evaluation& e, double eps);
ObjectiveVector penalty_values(const ProblemSpec& problem, const MixedPoint& x, double eps);

/// Componentwise clamp to the box. Integer coordinates must already be
/// integral; they are clamped to the (integral) bounds.
MixedPoint project_to_box(std::span<const double> x, const Box& box,
                          const IndexPartition& partition);

/// Mid-box point, integer coordinates at floor((l + u) / 2).
MixedPoint centroid(const Box& box, const IndexPartition& partition);

}  // namespace dfmo
