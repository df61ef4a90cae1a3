#include "povmduel/kernels.hpp"

namespace povmduel::kernels {

namespace {

cd scalar_dotc(std::size_t n, const cd* x, const cd* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

cd scalar_dotu(std::size_t n, const cd* x, const cd* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

void scalar_axpy(std::size_t n, cd a, const cd* x, cd* y) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cd(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void scalar_mix2(std::size_t n, cd a, cd b, cd c, cd d, cd* x, cd* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", scalar_dotc, scalar_dotu, scalar_axpy, scalar_mix2};
  return table;
}

}  // namespace povmduel::kernels
