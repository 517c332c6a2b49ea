#pragma once

// Hermitian eigendecomposition and the matrix exponentials built on it.
// Everything exponentiated in this project is Hermitian, so exp(-i s H) via
// eigendecomposition is exactly unitary up to rounding.

#include <functional>
#include <vector>

#include "leolab/operator.hpp"

namespace leolab {

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  Operator eigenvectors;            // column k = eigenvector of eigenvalues[k]
};

// Eigendecomposition of a Hermitian operator. Throws std::invalid_argument if
// h is not Hermitian within tol (default_tolerance() when tol < 0).
EighResult eigh(const Operator& h, double tol = -1.0);

// exp(-i * scale * h) for Hermitian h.
Operator expm_hermitian(const Operator& h, double scale, double tol = -1.0);

// f applied to the spectrum: V f(diag) V^dagger.
Operator hermitian_function(const EighResult& eig,
                            const std::function<cplx(double)>& f);

}  // namespace leolab
