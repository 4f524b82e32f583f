#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "dfmo/kernels.hpp"
#include "dfmo/model.hpp"

namespace dfmo {

/// One tuple (x, alpha^c, alpha^(d), xi) of the evolving list, with its
/// penalty values cached.
struct FrontEntry {
  MixedPoint x;
  double alpha_c = 1.0;
  /// Integer stepsize per primitive direction id. Ids past the end read as 1.
  std::vector<std::int64_t> alpha_d;
  double xi = 1.0;

  ObjectiveVector z;   // Z(x; eps)
  ObjectiveVector f;   // F(x)
  double violation = 0.0;

  /// xi values along the chain of entries this one descends from, oldest
  /// first. Diagnostics only; not part of the tuple.
  std::vector<double> xi_history;

  std::int64_t step(std::size_t direction_id) const {
    return direction_id < alpha_d.size() ? alpha_d[direction_id] : 1;
  }
  void set_step(std::size_t direction_id, std::int64_t value);

  /// Equality of the tuple (x, alpha^c, alpha^(d), xi).
  bool same_tuple(const FrontEntry& other) const;
};

/// Fingerprint of L[x] used for the "list unchanged" tests of the main loop:
/// the list revision, the point count and an order-independent 64-bit hash of
/// the point set.
struct PointSnapshot {
  std::uint64_t revision = 0;
  std::size_t size = 0;
  std::uint64_t fingerprint = 0;
};

enum class ListComparison { points, tuples };

/// The list L of the main loop. Entries keep insertion order (Add&Filter
/// appends the candidate after the survivors); no two entries share x.
class FrontList {
 public:
  FrontList(double eps, std::size_t q);

  double eps() const noexcept { return eps_; }
  std::size_t num_objectives() const noexcept { return q_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const FrontEntry> entries() const noexcept { return entries_; }
  const FrontEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// The entry at x, or nullptr. Constant time.
  const FrontEntry* find(const MixedPoint& x) const;

  /// Add&Filter: keeps the candidate unconditionally and drops every entry
  /// whose Z is dominated by the candidate's Z. A candidate whose x is already
  /// in the list is ignored, so the existing tuple keeps its stepsizes and xi.
  void add_and_filter(FrontEntry candidate);

  /// Swaps `old_entry` (matched as a whole tuple) for `updated`. Returns false
  /// and leaves the list untouched when the tuple is not present.
  bool replace_entry(const FrontEntry& old_entry, FrontEntry updated);

  /// True iff some x_j in the list has Z(x_j) - margin < trial componentwise.
  bool any_beats_by_margin(std::span<const double> trial, double margin) const;

  /// Sets alpha^(d) = 1 on every entry for direction ids in [from, to).
  void reset_steps(std::size_t from, std::size_t to);

  PointSnapshot snapshot_points() const;
  bool same_points(const PointSnapshot& snapshot) const;

  /// Bumped whenever the set L[x] changes.
  std::uint64_t revision() const noexcept { return revision_; }

 private:
  void insert_point(const MixedPoint& x, std::size_t id);
  void erase_point(const MixedPoint& x);

  double eps_;
  std::size_t q_;
  std::vector<FrontEntry> entries_;
  std::vector<std::size_t> ids_;       // stable id of each entry
  std::vector<std::size_t> position_;  // id -> index into entries_
  std::unordered_map<MixedPoint, std::size_t, MixedPointHash> index_;  // x -> id
  kernels::ObjectiveMatrix z_;
  std::uint64_t revision_ = 0;
  std::uint64_t fingerprint_ = 0;
};

bool lists_equal(const FrontList& a, const FrontList& b, ListComparison mode);

/// A point reported to the user.
struct ReportedPoint {
  MixedPoint x;
  ObjectiveVector f;
  double violation = 0.0;
  ObjectiveVector z;
};

/// The list re-filtered to mutual nondominance on Z, annotated with F and
/// violation. Order follows the list.
std::vector<ReportedPoint> final_front(const FrontList& list);

}  // namespace dfmo
