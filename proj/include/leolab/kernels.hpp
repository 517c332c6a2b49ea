#pragma once

// Dense complex arithmetic kernels with runtime-selected SIMD variants.
//
// Every kernel has a scalar reference implementation plus, where the build
// target supports it, an AVX2 (x86-64) or NEON (aarch64) variant using the
// same contract. The active variant is picked once at startup: the highest
// supported instruction set wins, overridable with LEOLAB_SIMD=scalar|avx2|
// neon|auto. All variants are equivalence-tested against the scalar
// reference (see tests/test_kernels.cpp).
//
// Complex data is the usual interleaved (re,im) layout of
// std::complex<double>; matrices are row-major and square.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace leolab::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;

  // c = a * b, n x n row-major. c must not alias a or b.
  void (*matmul)(cplx* c, const cplx* a, const cplx* b, int n);

  // y = a * x, n x n matrix times length-n vector. y must not alias a or x.
  void (*matvec)(cplx* y, const cplx* a, const cplx* x, int n);

  // sum_i conj(a_i) * b_i
  cplx (*dot_conj)(const cplx* a, const cplx* b, std::size_t len);

  // sum_i |a_i|^2
  double (*norm_sq)(const cplx* a, std::size_t len);

  // y_i += alpha * x_i
  void (*axpy)(cplx* y, cplx alpha, const cplx* x, std::size_t len);

  // y_i *= alpha
  void (*scale)(cplx* y, cplx alpha, std::size_t len);
};

// The variant in use. Selected on first call.
const KernelTable& active();

// Every variant compiled in and usable on this CPU (scalar is always first).
const std::vector<const KernelTable*>& available();

// Force a variant by name ("auto" re-runs detection). Returns false if the
// variant is unknown or unusable on this CPU.
bool select(std::string_view name);

extern const KernelTable scalar_table;
#if defined(LEOLAB_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(LEOLAB_HAVE_NEON)
extern const KernelTable neon_table;
#endif

}  // namespace leolab::kernels
