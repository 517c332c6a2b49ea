// Variant registry and runtime selection.

#include "leolab/kernels.hpp"

#include <cstdlib>
#include <string>

namespace leolab::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(LEOLAB_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::vector<const KernelTable*> build_available() {
  std::vector<const KernelTable*> v;
  v.push_back(&scalar_table);
#if defined(LEOLAB_HAVE_AVX2)
  if (cpu_has_avx2()) v.push_back(&avx2_table);
#endif
#if defined(LEOLAB_HAVE_NEON)
  v.push_back(&neon_table);
#endif
  return v;
}

const KernelTable* pick_auto() {
  const auto& v = available();
  return v.back();  // ordered scalar first, best last
}

const KernelTable*& active_slot() {
  static const KernelTable* slot = [] {
    const char* env = std::getenv("LEOLAB_SIMD");
    if (env != nullptr && std::string(env) != "auto") {
      for (const KernelTable* t : available())
        if (std::string(env) == t->name) return t;
      // Unknown or unusable request falls through to auto; the CLI surfaces
      // the active variant so a typo is visible.
    }
    return pick_auto();
  }();
  return slot;
}

}  // namespace

const std::vector<const KernelTable*>& available() {
  static const std::vector<const KernelTable*> v = build_available();
  return v;
}

const KernelTable& active() { return *active_slot(); }

bool select(std::string_view name) {
  if (name == "auto") {
    active_slot() = pick_auto();
    return true;
  }
  for (const KernelTable* t : available()) {
    if (name == t->name) {
      active_slot() = t;
      return true;
    }
  }
  return false;
}

}  // namespace leolab::kernels
