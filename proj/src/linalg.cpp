#include "leolab/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <lapacke.h>

namespace leolab {

EighResult eigh(const Operator& h, double tol) {
  if (tol < 0.0) tol = default_tolerance();
  if (!h.is_hermitian(tol)) {
    double worst = h.max_abs_diff(h.adjoint());
    throw std::invalid_argument("eigh: operator is not Hermitian (max |h - h^dag| = " +
                                std::to_string(worst) + ")");
  }
  const int n = h.dim();
  // zheev overwrites its input with the eigenvectors (columns, since we hand
  // it the row-major layout and ask for 'V').
  Operator vecs = h;
  std::vector<double> w(static_cast<std::size_t>(n));
  int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', n,
                           reinterpret_cast<lapack_complex_double*>(vecs.data()),
                           n, w.data());
  if (info != 0)
    throw std::runtime_error("eigh: LAPACK zheev failed, info = " + std::to_string(info));
  return {std::move(w), std::move(vecs)};
}

Operator hermitian_function(const EighResult& eig,
                            const std::function<cplx(double)>& f) {
  const Operator& v = eig.eigenvectors;
  const int n = v.dim();
  // V diag(f(w)) V^dagger
  Operator scaled(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) scaled(i, k) = v(i, k) * f(eig.eigenvalues[k]);
  }
  return scaled * v.adjoint();
}

Operator expm_hermitian(const Operator& h, double scale, double tol) {
  EighResult eig = eigh(h, tol);
  return hermitian_function(
      eig, [scale](double w) { return std::exp(cplx(0.0, -scale * w)); });
}

}  // namespace leolab
