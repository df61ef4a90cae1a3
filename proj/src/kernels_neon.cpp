// NEON variants for AArch64. One float64x2_t holds a single complex double,
// so the win over scalar comes from the fused multiply-adds and the paired
// loads in mix2. Compiled on AArch64 only.

#include "povmduel/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace povmduel::kernels {

namespace {

// [re, im] -> [im, re]
inline float64x2_t swap_ri(float64x2_t v) { return vextq_f64(v, v, 1); }

// complex multiply s * v with s broadcast as (sr, si)
inline float64x2_t cmul(float64x2_t sr, float64x2_t si, float64x2_t v) {
  // (sr*re - si*im, sr*im + si*re)
  const float64x2_t t = vmulq_f64(si, swap_ri(v));
  const float64x2_t signs = {-1.0, 1.0};
  return vfmaq_f64(vmulq_f64(signs, t), sr, v);
}

cd neon_dotc(std::size_t n, const cd* x, const cd* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  float64x2_t acc_a = vdupq_n_f64(0.0);
  float64x2_t acc_b = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(xs + 2 * i);
    const float64x2_t vy = vld1q_f64(ys + 2 * i);
    acc_a = vfmaq_f64(acc_a, vx, vy);              // (xr*yr, xi*yi)
    acc_b = vfmaq_f64(acc_b, vx, swap_ri(vy));     // (xr*yi, xi*yr)
  }
  return {vgetq_lane_f64(acc_a, 0) + vgetq_lane_f64(acc_a, 1),
          vgetq_lane_f64(acc_b, 0) - vgetq_lane_f64(acc_b, 1)};
}

cd neon_dotu(std::size_t n, const cd* x, const cd* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  float64x2_t acc_a = vdupq_n_f64(0.0);
  float64x2_t acc_b = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(xs + 2 * i);
    const float64x2_t vy = vld1q_f64(ys + 2 * i);
    acc_a = vfmaq_f64(acc_a, vx, vy);
    acc_b = vfmaq_f64(acc_b, vx, swap_ri(vy));
  }
  return {vgetq_lane_f64(acc_a, 0) - vgetq_lane_f64(acc_a, 1),
          vgetq_lane_f64(acc_b, 0) + vgetq_lane_f64(acc_b, 1)};
}

void neon_axpy(std::size_t n, cd a, const cd* x, cd* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  const float64x2_t ar = vdupq_n_f64(a.real());
  const float64x2_t ai = vdupq_n_f64(a.imag());
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(xs + 2 * i);
    const float64x2_t vy = vld1q_f64(ys + 2 * i);
    vst1q_f64(ys + 2 * i, vaddq_f64(vy, cmul(ar, ai, vx)));
  }
}

void neon_mix2(std::size_t n, cd a, cd b, cd c, cd d, cd* x, cd* y) {
  double* xs = reinterpret_cast<double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  const float64x2_t ar = vdupq_n_f64(a.real()), ai = vdupq_n_f64(a.imag());
  const float64x2_t br = vdupq_n_f64(b.real()), bi = vdupq_n_f64(b.imag());
  const float64x2_t cr = vdupq_n_f64(c.real()), ci = vdupq_n_f64(c.imag());
  const float64x2_t dr = vdupq_n_f64(d.real()), di = vdupq_n_f64(d.imag());
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t vx = vld1q_f64(xs + 2 * i);
    const float64x2_t vy = vld1q_f64(ys + 2 * i);
    vst1q_f64(xs + 2 * i, vaddq_f64(cmul(ar, ai, vx), cmul(br, bi, vy)));
    vst1q_f64(ys + 2 * i, vaddq_f64(cmul(cr, ci, vx), cmul(dr, di, vy)));
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{"neon", neon_dotc, neon_dotu, neon_axpy, neon_mix2};
  return table;
}

}  // namespace povmduel::kernels

#endif  // __aarch64__
