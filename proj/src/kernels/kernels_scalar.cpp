// Scalar reference kernels. These define the semantics every SIMD variant
// must reproduce; keep them boring.

#include "leolab/kernels.hpp"

namespace leolab::kernels {
namespace {

void matmul_scalar(cplx* c, const cplx* a, const cplx* b, int n) {
  for (int i = 0; i < n; ++i) {
    cplx* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const cplx aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == cplx(0.0, 0.0)) continue;
      const cplx* brow = b + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void matvec_scalar(cplx* y, const cplx* a, const cplx* x, int n) {
  for (int i = 0; i < n; ++i) {
    const cplx* arow = a + static_cast<std::size_t>(i) * n;
    cplx acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
}

cplx dot_conj_scalar(const cplx* a, const cplx* b, std::size_t len) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_scalar(const cplx* a, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i)
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

void axpy_scalar(cplx* y, cplx alpha, const cplx* x, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

void scale_scalar(cplx* y, cplx alpha, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] *= alpha;
}

}  // namespace

const KernelTable scalar_table = {
    "scalar",        matmul_scalar, matvec_scalar, dot_conj_scalar,
    norm_sq_scalar,  axpy_scalar,   scale_scalar,
};

}  // namespace leolab::kernels
