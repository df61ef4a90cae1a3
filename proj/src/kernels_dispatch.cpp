#include "povmduel/kernels.hpp"

namespace povmduel::kernels {

namespace {

const KernelTable* resolve() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return &avx2_table();
#endif
#if defined(__aarch64__)
  return &neon_table();
#endif
  return &scalar_table();
}

const KernelTable*& active_slot() {
  static const KernelTable* slot = resolve();
  return slot;
}

}  // namespace

const KernelTable& active() { return *active_slot(); }

const KernelTable& set_active(const KernelTable& table) {
  const KernelTable* previous = active_slot();
  active_slot() = &table;
  return *previous;
}

}  // namespace povmduel::kernels
