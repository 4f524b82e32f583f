#pragma once

// Dominance scans over a block of objective vectors.
//
// The block is column-major: value of row r in objective i lives at
// data[i * stride + r]. Every kernel exists as a scalar reference and, where
// the CPU allows, an AVX2 variant; the dispatching entry points pick one at
// first use. Both variants perform the same IEEE operations (one subtraction,
// one ordered comparison per element), so their results are identical.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dfmo::kernels {

struct ObjectiveBlock {
  const double* data = nullptr;
  std::size_t rows = 0;
  std::size_t q = 0;
  std::size_t stride = 0;

  double at(std::size_t row, std::size_t objective) const {
    return data[objective * stride + row];
  }
};

/// Owning column-major matrix of objective vectors. Columns are padded to a
/// capacity so rows can be appended in amortized constant time.
class ObjectiveMatrix {
 public:
  ObjectiveMatrix() = default;
  explicit ObjectiveMatrix(std::size_t q) : q_(q) {}

  template <class Rows>
  void assign(const Rows& rows) {
    rows_ = 0;
    reserve(std::size(rows));
    for (const auto& v : rows) push_back(v);
  }

  template <class Row>
  void push_back(const Row& v) {
    if (rows_ == capacity_) reserve(capacity_ == 0 ? 16 : 2 * capacity_);
    set_row(rows_++, v);
  }

  template <class Row>
  void set_row(std::size_t r, const Row& v) {
    for (std::size_t i = 0; i < q_; ++i) data_[i * capacity_ + r] = v[i];
  }

  /// Keeps the rows with keep[r] != 0, preserving their order.
  void compact(std::span<const std::uint8_t> keep) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (keep[r] == 0) continue;
      if (w != r) {
        for (std::size_t i = 0; i < q_; ++i) data_[i * capacity_ + w] = data_[i * capacity_ + r];
      }
      ++w;
    }
    rows_ = w;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t q() const noexcept { return q_; }
  ObjectiveBlock block() const noexcept { return {data_.data(), rows_, q_, capacity_}; }

 private:
  void reserve(std::size_t capacity) {
    if (capacity <= capacity_) return;
    std::vector<double> next(q_ * capacity, 0.0);
    for (std::size_t i = 0; i < q_; ++i) {
      std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(i * capacity_), rows_,
                  next.begin() + static_cast<std::ptrdiff_t>(i * capacity));
    }
    data_ = std::move(next);
    capacity_ = capacity;
  }

  std::size_t q_ = 0;
  std::size_t rows_ = 0;
  std::size_t capacity_ = 0;
  std::vector<double> data_;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
/// The variant the dispatching entry points currently use.
Isa active_isa();
/// Pins the dispatch to one variant (tests, benchmarks). Throws if unsupported.
void force_isa(Isa isa);

/// True iff some row r satisfies trial_i - row_r,i > -margin for every i, i.e.
/// the trial lies above row r shifted down by `margin` in every objective. The
/// difference form keeps margins far below the ulp of the values meaningful.
bool any_beats_by_margin(ObjectiveBlock block, std::span<const double> trial, double margin);

/// out[r] = 1 iff `candidate` dominates row r (<= everywhere, < somewhere).
void mark_dominated_by(ObjectiveBlock block, std::span<const double> candidate,
                       std::span<std::uint8_t> out);

/// True iff some row dominates v.
bool any_dominates(ObjectiveBlock block, std::span<const double> v);

namespace scalar {
bool any_beats_by_margin(ObjectiveBlock block, std::span<const double> trial, double margin);
void mark_dominated_by(ObjectiveBlock block, std::span<const double> candidate,
                       std::span<std::uint8_t> out);
bool any_dominates(ObjectiveBlock block, std::span<const double> v);
}  // namespace scalar

#if defined(DFMO_HAVE_AVX2)
namespace avx2 {
bool any_beats_by_margin(ObjectiveBlock block, std::span<const double> trial, double margin);
void mark_dominated_by(ObjectiveBlock block, std::span<const double> candidate,
                       std::span<std::uint8_t> out);
bool any_dominates(ObjectiveBlock block, std::span<const double> v);
}  // namespace avx2
#endif

}  // namespace dfmo::kernels
