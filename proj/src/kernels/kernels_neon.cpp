// NEON (aarch64) kernels. One complex double per 128-bit register. NEON is
// baseline on aarch64 so there is no runtime feature check beyond the
// architecture itself.

#include "leolab/kernels.hpp"

#if defined(LEOLAB_HAVE_NEON)

#include <arm_neon.h>

namespace leolab::kernels {
namespace {

// y += alpha * x over len complexes; vai holds (-alpha.im, alpha.im)
inline void caxpy(cplx* y, double ar, float64x2_t vai, const cplx* x,
                  std::size_t len) {
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  for (std::size_t i = 0; i < len; ++i) {
    float64x2_t vx = vld1q_f64(xd + 2 * i);
    float64x2_t vy = vld1q_f64(yd + 2 * i);
    vy = vfmaq_n_f64(vy, vx, ar);
    vy = vfmaq_f64(vy, vai, vextq_f64(vx, vx, 1));
    vst1q_f64(yd + 2 * i, vy);
  }
}

inline float64x2_t neg_pos(double ai) {
  const double t[2] = {-ai, ai};
  return vld1q_f64(t);
}

void matmul_neon(cplx* c, const cplx* a, const cplx* b, int n) {
  for (int i = 0; i < n; ++i) {
    cplx* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const cplx aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == cplx(0.0, 0.0)) continue;
      caxpy(crow, aik.real(), neg_pos(aik.imag()),
            b + static_cast<std::size_t>(k) * n, n);
    }
  }
}

void matvec_neon(cplx* y, const cplx* a, const cplx* x, int n) {
  const double* xd = reinterpret_cast<const double*>(x);
  for (int i = 0; i < n; ++i) {
    const double* ad =
        reinterpret_cast<const double*>(a + static_cast<std::size_t>(i) * n);
    float64x2_t accp = vdupq_n_f64(0.0);  // (sum ar*xr, sum ai*xi)
    float64x2_t accq = vdupq_n_f64(0.0);  // (sum ar*xi, sum ai*xr)
    for (int j = 0; j < n; ++j) {
      float64x2_t va = vld1q_f64(ad + 2 * j);
      float64x2_t vx = vld1q_f64(xd + 2 * j);
      accp = vfmaq_f64(accp, va, vx);
      accq = vfmaq_f64(accq, va, vextq_f64(vx, vx, 1));
    }
    y[i] = cplx(vgetq_lane_f64(accp, 0) - vgetq_lane_f64(accp, 1),
                vaddvq_f64(accq));
  }
}

cplx dot_conj_neon(const cplx* a, const cplx* b, std::size_t len) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  float64x2_t accp = vdupq_n_f64(0.0);  // (sum ar*br, sum ai*bi)
  float64x2_t accq = vdupq_n_f64(0.0);  // (sum ai*br, sum ar*bi)
  for (std::size_t i = 0; i < len; ++i) {
    float64x2_t va = vld1q_f64(ad + 2 * i);
    float64x2_t vb = vld1q_f64(bd + 2 * i);
    accp = vfmaq_f64(accp, va, vb);
    accq = vfmaq_f64(accq, vextq_f64(va, va, 1), vb);
  }
  return {vaddvq_f64(accp),
          vgetq_lane_f64(accq, 1) - vgetq_lane_f64(accq, 0)};
}

double norm_sq_neon(const cplx* a, std::size_t len) {
  const double* ad = reinterpret_cast<const double*>(a);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < len; ++i) {
    float64x2_t va = vld1q_f64(ad + 2 * i);
    acc = vfmaq_f64(acc, va, va);
  }
  return vaddvq_f64(acc);
}

void axpy_neon(cplx* y, cplx alpha, const cplx* x, std::size_t len) {
  caxpy(y, alpha.real(), neg_pos(alpha.imag()), x, len);
}

void scale_neon(cplx* y, cplx alpha, std::size_t len) {
  const double ar = alpha.real();
  const float64x2_t vai = neg_pos(alpha.imag());
  double* yd = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < len; ++i) {
    float64x2_t vy = vld1q_f64(yd + 2 * i);
    float64x2_t t = vmulq_n_f64(vy, ar);
    t = vfmaq_f64(t, vai, vextq_f64(vy, vy, 1));
    vst1q_f64(yd + 2 * i, t);
  }
}

}  // namespace

const KernelTable neon_table = {
    "neon",       matmul_neon, matvec_neon, dot_conj_neon,
    norm_sq_neon, axpy_neon,   scale_neon,
};

}  // namespace leolab::kernels

#endif  // LEOLAB_HAVE_NEON
