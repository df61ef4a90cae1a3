// AVX2+FMA variants of the complex kernels. Compiled with -mavx2 -mfma on
// x86-64 only; selected at runtime through the dispatch table so the binary
// stays runnable on CPUs without AVX2.

#include "povmduel/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace povmduel::kernels {

namespace {

// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// complex multiply s * v for broadcast scalar s = (sr, si)
inline __m256d cmul(__m256d sr, __m256d si, __m256d v) {
  return _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, swap_pairs(v)));
}

cd avx2_dotc(std::size_t n, const cd* x, const cd* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  __m256d acc_a = _mm256_setzero_pd();  // xr*yr, xi*yi pairs
  __m256d acc_b = _mm256_setzero_pd();  // xr*yi, xi*yr pairs
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xs + 2 * i);
    const __m256d vy = _mm256_loadu_pd(ys + 2 * i);
    acc_a = _mm256_fmadd_pd(vx, vy, acc_a);
    acc_b = _mm256_fmadd_pd(vx, swap_pairs(vy), acc_b);
  }
  alignas(32) double a[4], b[4];
  _mm256_store_pd(a, acc_a);
  _mm256_store_pd(b, acc_b);
  double re = a[0] + a[1] + a[2] + a[3];
  double im = b[0] - b[1] + b[2] - b[3];
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

cd avx2_dotu(std::size_t n, const cd* x, const cd* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  __m256d acc_a = _mm256_setzero_pd();
  __m256d acc_b = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xs + 2 * i);
    const __m256d vy = _mm256_loadu_pd(ys + 2 * i);
    acc_a = _mm256_fmadd_pd(vx, vy, acc_a);
    acc_b = _mm256_fmadd_pd(vx, swap_pairs(vy), acc_b);
  }
  alignas(32) double a[4], b[4];
  _mm256_store_pd(a, acc_a);
  _mm256_store_pd(b, acc_b);
  double re = a[0] - a[1] + a[2] - a[3];
  double im = b[0] + b[1] + b[2] + b[3];
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

void avx2_axpy(std::size_t n, cd a, const cd* x, cd* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xs + 2 * i);
    const __m256d vy = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(vy, cmul(ar, ai, vx)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cd(a.real() * xr - a.imag() * xi, a.real() * xi + a.imag() * xr);
  }
}

void avx2_mix2(std::size_t n, cd a, cd b, cd c, cd d, cd* x, cd* y) {
  double* xs = reinterpret_cast<double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xs + 2 * i);
    const __m256d vy = _mm256_loadu_pd(ys + 2 * i);
    const __m256d nx = _mm256_add_pd(cmul(ar, ai, vx), cmul(br, bi, vy));
    const __m256d ny = _mm256_add_pd(cmul(cr, ci, vx), cmul(dr, di, vy));
    _mm256_storeu_pd(xs + 2 * i, nx);
    _mm256_storeu_pd(ys + 2 * i, ny);
  }
  for (; i < n; ++i) {
    const cd xi = x[i], yi = y[i];
    x[i] = a * xi + b * yi;
    y[i] = c * xi + d * yi;
  }
}

}  // namespace

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", avx2_dotc, avx2_dotu, avx2_axpy, avx2_mix2};
  return table;
}

}  // namespace povmduel::kernels

#endif  // x86-64
