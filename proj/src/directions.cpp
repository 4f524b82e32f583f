#include "dfmo/directions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include <boost/math/distributions/normal.hpp>

namespace dfmo {

namespace {

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

std::int64_t sup_norm(std::span<const std::int64_t> v) {
  std::int64_t m = 0;
  for (std::int64_t c : v) m = std::max(m, c < 0 ? -c : c);
  return m;
}

}  // namespace

double radical_inverse(std::uint64_t index, std::uint64_t base) {
  const double inv = 1.0 / static_cast<double>(base);
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f *= inv;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

DirectionSequence::DirectionSequence(const IndexPartition& partition,
                                     bool coordinate_directions_first)
    : partition_(partition),
      bases_(first_primes(partition.continuous().size())),
      coordinate_prefix_(coordinate_directions_first ? 2 * partition.continuous().size() : 0) {}

std::vector<double> DirectionSequence::embed(std::span<const double> continuous_part) const {
  std::vector<double> out(partition_.size(), 0.0);
  auto c = partition_.continuous();
  for (std::size_t k = 0; k < c.size(); ++k) out[c[k]] = continuous_part[k];
  return out;
}

std::vector<double> DirectionSequence::next() {
  const std::size_t nc = bases_.size();
  std::vector<double> u(nc, 0.0);
  if (emitted_ < coordinate_prefix_) {
    u[emitted_ / 2] = (emitted_ % 2 == 0) ? 1.0 : -1.0;
    ++emitted_;
    return embed(u);
  }

  static const boost::math::normal_distribution<double> standard_normal(0.0, 1.0);
  for (;;) {
    const std::uint64_t i = halton_index_++;
    double norm2 = 0.0;
    for (std::size_t k = 0; k < nc; ++k) {
      u[k] = boost::math::quantile(standard_normal, radical_inverse(i, bases_[k]));
      norm2 += u[k] * u[k];
    }
    if (norm2 == 0.0) continue;
    const double norm = std::sqrt(norm2);
    for (double& v : u) v /= norm;
    ++emitted_;
    return embed(u);
  }
}

std::vector<double> PrimitiveDirection::dense(const IndexPartition& partition) const {
  std::vector<double> out(partition.size(), 0.0);
  auto z = partition.integer();
  for (std::size_t k = 0; k < z.size(); ++k) out[z[k]] = static_cast<double>(components[k]);
  return out;
}

bool is_primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (std::int64_t c : v) g = std::gcd(g, c);
  return g == 1;
}

std::int64_t max_feasible_step(const MixedPoint& y, const PrimitiveDirection& p, const Box& box,
                               const IndexPartition& partition) {
  auto z = partition.integer();
  std::optional<std::int64_t> best;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const std::int64_t pk = p.components[k];
    if (pk == 0) continue;
    const auto lo = static_cast<std::int64_t>(box.lower[z[k]]);
    const auto hi = static_cast<std::int64_t>(box.upper[z[k]]);
    const std::int64_t room = pk > 0 ? (hi - y.integer[k]) / pk : (y.integer[k] - lo) / -pk;
    best = best ? std::min(*best, room) : room;
  }
  return std::max<std::int64_t>(0, best.value_or(0));
}

DirectionSet::DirectionSet(const IndexPartition& partition, const Box& box) {
  for (std::size_t i : partition.integer()) {
    range_.push_back(static_cast<std::int64_t>(box.upper[i] - box.lower[i]));
  }
  max_range_ = range_.empty() ? 0 : *std::max_element(range_.begin(), range_.end());
  open_shell(1);
}

bool DirectionSet::add(std::vector<std::int64_t> v) {
  if (!present_.insert(v).second) return false;
  directions_.push_back({std::move(v), directions_.size()});
  return true;
}

void DirectionSet::open_shell(std::int64_t r) {
  shell_ = r;
  if (r > max_range_) return;
  cursor_limit_.resize(range_.size());
  for (std::size_t i = 0; i < range_.size(); ++i) cursor_limit_[i] = std::min(r, range_[i]);
  cursor_.resize(range_.size());
  for (std::size_t i = 0; i < range_.size(); ++i) cursor_[i] = -cursor_limit_[i];
  cursor_fresh_ = true;
}

bool DirectionSet::advance() {
  while (shell_ <= max_range_) {
    if (cursor_fresh_) {
      cursor_fresh_ = false;
    } else {
      std::size_t i = cursor_.size();
      while (i > 0 && cursor_[i - 1] == cursor_limit_[i - 1]) --i;
      if (i == 0) {
        open_shell(shell_ + 1);
        continue;
      }
      ++cursor_[i - 1];
      for (std::size_t j = i; j < cursor_.size(); ++j) cursor_[j] = -cursor_limit_[j];
    }
    if (sup_norm(cursor_) == shell_ && is_primitive(cursor_) && !present_.contains(cursor_)) {
      return true;
    }
  }
  return false;
}

std::size_t DirectionSet::enrich(std::size_t max_new) {
  if (exhausted_) return 0;
  const std::int64_t target = level_ + 1;
  std::size_t added = 0;
  for (;;) {
    // A fresh cursor has not been examined yet; a consumed one must move on.
    if (!advance()) {
      exhausted_ = true;
      level_ = std::max(level_, max_range_);
      break;
    }
    if (max_new == 0 && shell_ > target) {
      // Leave this vector for the next call.
      cursor_fresh_ = true;
      level_ = shell_ - 1;
      break;
    }
    add(cursor_);
    ++added;
    if (max_new != 0 && added == max_new) {
      level_ = std::max(level_, shell_ - 1);
      break;
    }
  }
  return added;
}

DirectionSet initial_directions(const IndexPartition& partition, const Box& box) {
  DirectionSet set(partition, box);
  const std::size_t nz = partition.integer().size();
  for (std::size_t k = 0; k < nz; ++k) {
    if (set.range_[k] < 1) continue;
    for (std::int64_t sign : {1, -1}) {
      std::vector<std::int64_t> v(nz, 0);
      v[k] = sign;
      set.add(std::move(v));
    }
  }
  set.level_ = 1;
  return set;
}

}  // namespace dfmo
