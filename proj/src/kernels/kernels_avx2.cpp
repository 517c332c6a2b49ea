// AVX2+FMA kernels. Two complex doubles per 256-bit register, interleaved
// (re, im, re, im). Tails fall back to scalar code. This TU is compiled with
// -mavx2 -mfma; the dispatcher only installs it when the CPU reports both.

#include "leolab/kernels.hpp"

#if defined(LEOLAB_HAVE_AVX2)

#include <immintrin.h>

namespace leolab::kernels {
namespace {

inline double sum_all(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// lanes are (e0, o0, e1, o1); returns (o0 + o1) - (e0 + e1)
inline double sum_odd_minus_even(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);  // (e0+e1, o0+o1)
  return _mm_cvtsd_f64(_mm_unpackhi_pd(s, s)) - _mm_cvtsd_f64(s);
}

// crow[j] += aik * brow[j] for 2 complexes per step
inline void row_axpy(cplx* crow, cplx aik, const cplx* brow, int n) {
  const double ar = aik.real(), ai = aik.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_setr_pd(-ai, ai, -ai, ai);
  double* c = reinterpret_cast<double*>(crow);
  const double* b = reinterpret_cast<const double*>(brow);
  int j = 0;
  for (; j + 2 <= n; j += 2) {
    __m256d vb = _mm256_loadu_pd(b + 2 * j);
    __m256d vc = _mm256_loadu_pd(c + 2 * j);
    vc = _mm256_fmadd_pd(var, vb, vc);
    __m256d vbs = _mm256_permute_pd(vb, 0x5);  // (im, re) per complex
    vc = _mm256_fmadd_pd(vai, vbs, vc);
    _mm256_storeu_pd(c + 2 * j, vc);
  }
  for (; j < n; ++j) crow[j] += aik * brow[j];
}

void matmul_avx2(cplx* c, const cplx* a, const cplx* b, int n) {
  for (int i = 0; i < n; ++i) {
    cplx* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const cplx aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == cplx(0.0, 0.0)) continue;
      row_axpy(crow, aik, b + static_cast<std::size_t>(k) * n, n);
    }
  }
}

void matvec_avx2(cplx* y, const cplx* a, const cplx* x, int n) {
  const double* xd = reinterpret_cast<const double*>(x);
  for (int i = 0; i < n; ++i) {
    const cplx* arow = a + static_cast<std::size_t>(i) * n;
    const double* ad = reinterpret_cast<const double*>(arow);
    __m256d accp = _mm256_setzero_pd();  // lanes (ar*xr, ai*xi)
    __m256d accq = _mm256_setzero_pd();  // lanes (ar*xi, ai*xr)
    int j = 0;
    for (; j + 2 <= n; j += 2) {
      __m256d va = _mm256_loadu_pd(ad + 2 * j);
      __m256d vx = _mm256_loadu_pd(xd + 2 * j);
      accp = _mm256_fmadd_pd(va, vx, accp);
      accq = _mm256_fmadd_pd(va, _mm256_permute_pd(vx, 0x5), accq);
    }
    double re = -sum_odd_minus_even(accp);  // sum(ar*xr) - sum(ai*xi)
    double im = sum_all(accq);
    cplx acc(re, im);
    for (; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

cplx dot_conj_avx2(const cplx* a, const cplx* b, std::size_t len) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  __m256d accp = _mm256_setzero_pd();  // lanes (ar*br, ai*bi)
  __m256d accq = _mm256_setzero_pd();  // lanes (ai*br, ar*bi)
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d va = _mm256_loadu_pd(ad + 2 * i);
    __m256d vb = _mm256_loadu_pd(bd + 2 * i);
    accp = _mm256_fmadd_pd(va, vb, accp);
    accq = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), vb, accq);
  }
  double re = sum_all(accp);
  double im = sum_odd_minus_even(accq);  // sum(ar*bi) - sum(ai*br)
  cplx acc(re, im);
  for (; i < len; ++i) {
    acc += cplx(a[i].real() * b[i].real() + a[i].imag() * b[i].imag(),
                a[i].real() * b[i].imag() - a[i].imag() * b[i].real());
  }
  return acc;
}

double norm_sq_avx2(const cplx* a, std::size_t len) {
  const double* ad = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d va = _mm256_loadu_pd(ad + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  double s = sum_all(acc);
  for (; i < len; ++i)
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void axpy_avx2(cplx* y, cplx alpha, const cplx* x, std::size_t len) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_setr_pd(-ai, ai, -ai, ai);
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    vy = _mm256_fmadd_pd(var, vx, vy);
    vy = _mm256_fmadd_pd(vai, _mm256_permute_pd(vx, 0x5), vy);
    _mm256_storeu_pd(yd + 2 * i, vy);
  }
  for (; i < len; ++i) y[i] += alpha * x[i];
}

void scale_avx2(cplx* y, cplx alpha, std::size_t len) {
  const double ar = alpha.real(), ai = alpha.imag();
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_setr_pd(-ai, ai, -ai, ai);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    __m256d t = _mm256_mul_pd(var, vy);
    t = _mm256_fmadd_pd(vai, _mm256_permute_pd(vy, 0x5), t);
    _mm256_storeu_pd(yd + 2 * i, t);
  }
  for (; i < len; ++i) y[i] *= alpha;
}

}  // namespace

const KernelTable avx2_table = {
    "avx2",       matmul_avx2, matvec_avx2, dot_conj_avx2,
    norm_sq_avx2, axpy_avx2,   scale_avx2,
};

}  // namespace leolab::kernels

#endif  // LEOLAB_HAVE_AVX2
