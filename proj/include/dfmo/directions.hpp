#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "dfmo/model.hpp"

namespace dfmo {

/// Deterministic stream of unit directions s_k, dense in the unit sphere of
/// the continuous subspace and zero on the integer coordinates.
///
/// Point i of a radical-inverse (Halton) sequence in [0,1]^{n_c}, one prime
/// base per coordinate, is pushed through the inverse standard-normal CDF and
/// normalised. Index 0 is skipped (it maps to -inf), as is any point that maps
/// to the origin. With `coordinate_directions_first`, +e_i, -e_i for every
/// continuous i come before the dense stream.
class DirectionSequence {
 public:
  explicit DirectionSequence(const IndexPartition& partition,
                             bool coordinate_directions_first = false);

  /// The next direction as a dense n-vector.
  std::vector<double> next();

  /// Number of directions emitted so far.
  std::size_t count() const noexcept { return emitted_; }

 private:
  std::vector<double> embed(std::span<const double> continuous_part) const;

  IndexPartition partition_;
  std::vector<std::uint64_t> bases_;
  std::uint64_t halton_index_ = 1;
  std::size_t emitted_ = 0;
  std::size_t coordinate_prefix_;
};

/// Radical inverse of `index` in `base`.
double radical_inverse(std::uint64_t index, std::uint64_t base);

/// Integer direction over the integer coordinates (ordered as
/// IndexPartition::integer()). The continuous part is implicitly zero.
struct PrimitiveDirection {
  std::vector<std::int64_t> components;
  std::size_t id = 0;

  std::vector<double> dense(const IndexPartition& partition) const;
};

/// v != 0 and the gcd of its nonzero components is 1.
bool is_primitive(std::span<const std::int64_t> v);

/// Largest t >= 0 with y + t p inside the box.
std::int64_t max_feasible_step(const MixedPoint& y, const PrimitiveDirection& p, const Box& box,
                               const IndexPartition& partition);

/// The growing set D_k of primitive discrete directions.
///
/// Directions are enumerated by sup-norm shells r = 1, 2, ..., each shell in
/// lexicographic order, skipping vectors already present and vectors with a
/// component larger than the coordinate's range u_i - l_i (those are
/// infeasible from every point of the box). Once no shell can add anything the
/// set equals the feasible primitive directions and is at its cap.
class DirectionSet {
 public:
  DirectionSet(const IndexPartition& partition, const Box& box);

  std::span<const PrimitiveDirection> directions() const noexcept { return directions_; }
  std::size_t size() const noexcept { return directions_.size(); }
  const PrimitiveDirection& operator[](std::size_t i) const { return directions_[i]; }

  /// Every shell up to this radius has been fully added.
  std::int64_t level() const noexcept { return level_; }
  bool at_cap() const noexcept { return exhausted_; }

  /// Adds the remaining vectors of shells <= level() + 1 (max_new == 0) or at
  /// most max_new further vectors in enumeration order. Returns the number of
  /// directions added; 0 means the set was already at its cap.
  std::size_t enrich(std::size_t max_new = 0);

 private:
  friend DirectionSet initial_directions(const IndexPartition&, const Box&);

  bool add(std::vector<std::int64_t> v);
  // Moves the odometer to the next admissible vector of the current shell,
  // opening further shells as needed. False once every shell is exhausted.
  bool advance();
  void open_shell(std::int64_t r);

  std::vector<std::int64_t> range_;
  std::int64_t max_range_ = 0;
  std::vector<PrimitiveDirection> directions_;
  std::set<std::vector<std::int64_t>> present_;
  std::int64_t level_ = 0;
  bool exhausted_ = false;

  std::int64_t shell_ = 0;
  std::vector<std::int64_t> cursor_;
  std::vector<std::int64_t> cursor_limit_;
  bool cursor_fresh_ = false;
};

/// D_0 = {+e_i, -e_i : i integer}, ordered by index then sign, at level 1.
DirectionSet initial_directions(const IndexPartition& partition, const Box& box);

}  // namespace dfmo
