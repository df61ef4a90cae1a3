#pragma once
// Dense complex vector kernels with runtime-dispatched SIMD backends.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2+FMA
// variant is installed at startup when the CPU supports it; on AArch64 a
// NEON variant. All higher-level linear algebra (matrix products, Jacobi
// rotations, Gram updates) is expressed through this table so the SIMD and
// scalar paths stay equivalence-testable against each other.

#include <complex>
#include <cstddef>

namespace povmduel::kernels {

using cd = std::complex<double>;

struct KernelTable {
  const char* name;
  // sum_i conj(x[i]) * y[i]
  cd (*dotc)(std::size_t n, const cd* x, const cd* y);
  // sum_i x[i] * y[i]
  cd (*dotu)(std::size_t n, const cd* x, const cd* y);
  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, cd a, const cd* x, cd* y);
  // (x[i], y[i]) <- (a*x[i] + b*y[i], c*x[i] + d*y[i]); the Jacobi hot loop
  void (*mix2)(std::size_t n, cd a, cd b, cd c, cd d, cd* x, cd* y);
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__)
const KernelTable& neon_table();
#endif

// Table selected for this CPU at first use.
const KernelTable& active();

// Swaps the active table and returns the previous one. Intended for the
// backend equivalence tests; not safe while other threads are computing.
const KernelTable& set_active(const KernelTable& table);

inline cd dotc(std::size_t n, const cd* x, const cd* y) { return active().dotc(n, x, y); }
inline cd dotu(std::size_t n, const cd* x, const cd* y) { return active().dotu(n, x, y); }
inline void axpy(std::size_t n, cd a, const cd* x, cd* y) { active().axpy(n, a, x, y); }
inline void mix2(std::size_t n, cd a, cd b, cd c, cd d, cd* x, cd* y) {
  active().mix2(n, a, b, c, d, x, y);
}

}  // namespace povmduel::kernels
