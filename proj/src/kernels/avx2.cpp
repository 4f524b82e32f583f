// Compiled with -mavx2. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "dfmo/kernels.hpp"

namespace dfmo::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d load_rows(const ObjectiveBlock& b, std::size_t i, std::size_t r) {
  return _mm256_loadu_pd(b.data + i * b.stride + r);
}

}  // namespace

bool any_beats_by_margin(ObjectiveBlock block, std::span<const double> trial, double margin) {
  const __m256d neg_m = _mm256_set1_pd(-margin);
  std::size_t r = 0;
  for (; r + kLanes <= block.rows; r += kLanes) {
    __m256d beats = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    for (std::size_t i = 0; i < block.q; ++i) {
      const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(trial[i]), load_rows(block, i, r));
      beats = _mm256_and_pd(beats, _mm256_cmp_pd(diff, neg_m, _CMP_GT_OQ));
    }
    if (_mm256_movemask_pd(beats) != 0) return true;
  }
  ObjectiveBlock tail = block;
  tail.data = block.data + r;
  tail.rows = block.rows - r;
  return scalar::any_beats_by_margin(tail, trial, margin);
}

void mark_dominated_by(ObjectiveBlock block, std::span<const double> candidate,
                       std::span<std::uint8_t> out) {
  std::size_t r = 0;
  for (; r + kLanes <= block.rows; r += kLanes) {
    __m256d le = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    __m256d lt = _mm256_setzero_pd();
    for (std::size_t i = 0; i < block.q; ++i) {
      const __m256d v = load_rows(block, i, r);
      const __m256d c = _mm256_set1_pd(candidate[i]);
      le = _mm256_and_pd(le, _mm256_cmp_pd(c, v, _CMP_LE_OQ));
      lt = _mm256_or_pd(lt, _mm256_cmp_pd(c, v, _CMP_LT_OQ));
    }
    const int mask = _mm256_movemask_pd(_mm256_and_pd(le, lt));
    for (std::size_t k = 0; k < kLanes; ++k) out[r + k] = static_cast<std::uint8_t>((mask >> k) & 1);
  }
  ObjectiveBlock tail = block;
  tail.data = block.data + r;
  tail.rows = block.rows - r;
  scalar::mark_dominated_by(tail, candidate, out.subspan(r));
}

bool any_dominates(ObjectiveBlock block, std::span<const double> v) {
  std::size_t r = 0;
  for (; r + kLanes <= block.rows; r += kLanes) {
    __m256d le = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
    __m256d lt = _mm256_setzero_pd();
    for (std::size_t i = 0; i < block.q; ++i) {
      const __m256d w = load_rows(block, i, r);
      const __m256d x = _mm256_set1_pd(v[i]);
      le = _mm256_and_pd(le, _mm256_cmp_pd(w, x, _CMP_LE_OQ));
      lt = _mm256_or_pd(lt, _mm256_cmp_pd(w, x, _CMP_LT_OQ));
    }
    if (_mm256_movemask_pd(_mm256_and_pd(le, lt)) != 0) return true;
  }
  ObjectiveBlock tail = block;
  tail.data = block.data + r;
  tail.rows = block.rows - r;
  return scalar::any_dominates(tail, v);
}

}  // namespace dfmo::kernels::avx2
