#include "dfmo/kernels.hpp"

namespace dfmo::kernels::scalar {

bool any_beats_by_margin(ObjectiveBlock block, std::span<const double> trial, double margin) {
  for (std::size_t r = 0; r < block.rows; ++r) {
    bool beats = true;
    for (std::size_t i = 0; i < block.q && beats; ++i) {
      beats = trial[i] - block.at(r, i) > -margin;
    }
    if (beats) return true;
  }
  return false;
}

void mark_dominated_by(ObjectiveBlock block, std::span<const double> candidate,
                       std::span<std::uint8_t> out) {
  for (std::size_t r = 0; r < block.rows; ++r) {
    bool le = true;
    bool lt = false;
    for (std::size_t i = 0; i < block.q; ++i) {
      const double v = block.at(r, i);
      le = le && candidate[i] <= v;
      lt = lt || candidate[i] < v;
    }
    out[r] = (le && lt) ? 1 : 0;
  }
}

bool any_dominates(ObjectiveBlock block, std::span<const double> v) {
  for (std::size_t r = 0; r < block.rows; ++r) {
    bool le = true;
    bool lt = false;
    for (std::size_t i = 0; i < block.q; ++i) {
      const double w = block.at(r, i);
      le = le && w <= v[i];
      lt = lt || w < v[i];
    }
    if (le && lt) return true;
  }
  return false;
}

}  // namespace dfmo::kernels::scalar
