#include "dfmo/front_list.hpp"

#include <algorithm>

namespace dfmo {

void FrontEntry::set_step(std::size_t direction_id, std::int64_t value) {
  if (value < 1) throw UsageError("discrete stepsizes must be at least 1");
  if (direction_id >= alpha_d.size()) alpha_d.resize(direction_id + 1, 1);
  alpha_d[direction_id] = value;
}

bool FrontEntry::same_tuple(const FrontEntry& other) const {
  if (alpha_c != other.alpha_c || xi != other.xi || !(x == other.x)) return false;
  const std::size_t n = std::max(alpha_d.size(), other.alpha_d.size());
  for (std::size_t d = 0; d < n; ++d) {
    if (step(d) != other.step(d)) return false;
  }
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

std::uint64_t point_hash(const MixedPoint& x) { return mix(MixedPointHash{}(x)); }

}  // namespace

FrontList::FrontList(double eps, std::size_t q) : eps_(eps), q_(q), z_(q) {
  if (!(eps > 0.0)) throw UsageError("penalty parameter eps must be positive");
  if (q == 0) throw UsageError("a front list needs at least one objective");
}

const FrontEntry* FrontList::find(const MixedPoint& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? nullptr : &entries_[position_[it->second]];
}

void FrontList::insert_point(const MixedPoint& x, std::size_t id) {
  index_.emplace(x, id);
  fingerprint_ += point_hash(x);
}

void FrontList::erase_point(const MixedPoint& x) {
  index_.erase(x);
  fingerprint_ -= point_hash(x);
}

void FrontList::add_and_filter(FrontEntry candidate) {
  if (candidate.z.size() != q_) throw UsageError("candidate has the wrong number of objectives");
  if (find(candidate.x) != nullptr) return;

  std::vector<std::uint8_t> dominated(entries_.size());
  kernels::mark_dominated_by(z_.block(), candidate.z, dominated);
  if (std::find(dominated.begin(), dominated.end(), 1) != dominated.end()) {
    std::vector<std::uint8_t> keep(entries_.size());
    std::size_t w = 0;
    for (std::size_t r = 0; r < entries_.size(); ++r) {
      keep[r] = dominated[r] == 0;
      if (!keep[r]) {
        erase_point(entries_[r].x);
        continue;
      }
      if (w != r) {
        entries_[w] = std::move(entries_[r]);
        ids_[w] = ids_[r];
      }
      position_[ids_[w]] = w;
      ++w;
    }
    entries_.resize(w);
    ids_.resize(w);
    z_.compact(keep);
  }

  const std::size_t id = position_.size();
  position_.push_back(entries_.size());
  ids_.push_back(id);
  insert_point(candidate.x, id);
  z_.push_back(candidate.z);
  entries_.push_back(std::move(candidate));
  ++revision_;
}

bool FrontList::replace_entry(const FrontEntry& old_entry, FrontEntry updated) {
  auto it = index_.find(old_entry.x);
  if (it == index_.end()) return false;
  const std::size_t id = it->second;
  const std::size_t pos = position_[id];
  if (!entries_[pos].same_tuple(old_entry)) return false;
  if (!(updated.x == old_entry.x)) {
    if (find(updated.x) != nullptr) throw UsageError("replace_entry would duplicate a point");
    erase_point(old_entry.x);
    insert_point(updated.x, id);
    ++revision_;
  }
  z_.set_row(pos, updated.z);
  entries_[pos] = std::move(updated);
  return true;
}

bool FrontList::any_beats_by_margin(std::span<const double> trial, double margin) const {
  return kernels::any_beats_by_margin(z_.block(), trial, margin);
}

void FrontList::reset_steps(std::size_t from, std::size_t to) {
  for (FrontEntry& e : entries_) {
    for (std::size_t d = from; d < to; ++d) e.set_step(d, 1);
  }
}

PointSnapshot FrontList::snapshot_points() const {
  return {revision_, entries_.size(), fingerprint_};
}

bool FrontList::same_points(const PointSnapshot& snapshot) const {
  if (snapshot.revision == revision_) return true;
  return snapshot.size == entries_.size() && snapshot.fingerprint == fingerprint_;
}

bool lists_equal(const FrontList& a, const FrontList& b, ListComparison mode) {
  if (a.size() != b.size()) return false;
  for (const FrontEntry& e : a.entries()) {
    const FrontEntry* other = b.find(e.x);
    if (other == nullptr) return false;
    if (mode == ListComparison::tuples && !e.same_tuple(*other)) return false;
  }
  return true;
}

std::vector<ReportedPoint> final_front(const FrontList& list) {
  kernels::ObjectiveMatrix z(list.num_objectives());
  std::vector<std::span<const double>> rows;
  for (const FrontEntry& e : list.entries()) rows.emplace_back(e.z);
  z.assign(rows);

  std::vector<ReportedPoint> out;
  for (const FrontEntry& e : list.entries()) {
    if (kernels::any_dominates(z.block(), e.z)) continue;
    out.push_back({e.x, e.f, e.violation, e.z});
  }
  return out;
}

}  // namespace dfmo
