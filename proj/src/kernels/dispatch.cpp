#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dfmo/kernels.hpp"

namespace dfmo::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("DFMO_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::scalar;
  }
#if defined(DFMO_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(DFMO_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("instruction set " + std::string(isa_name(isa)) +
                             " is not available on this machine");
  }
  current().store(isa, std::memory_order_relaxed);
}

bool any_beats_by_margin(ObjectiveBlock block, std::span<const double> trial, double margin) {
#if defined(DFMO_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::any_beats_by_margin(block, trial, margin);
#endif
  return scalar::any_beats_by_margin(block, trial, margin);
}

void mark_dominated_by(ObjectiveBlock block, std::span<const double> candidate,
                       std::span<std::uint8_t> out) {
#if defined(DFMO_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::mark_dominated_by(block, candidate, out);
#endif
  scalar::mark_dominated_by(block, candidate, out);
}

bool any_dominates(ObjectiveBlock block, std::span<const double> v) {
#if defined(DFMO_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::any_dominates(block, v);
#endif
  return scalar::any_dominates(block, v);
}

}  // namespace dfmo::kernels
