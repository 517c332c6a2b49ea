#include "leolab/operator.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace leolab {

namespace {

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> tol = [] {
    if (const char* env = std::getenv("LEOLAB_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-10;
  }();
  return tol;
}

}  // namespace

double default_tolerance() { return tolerance_slot().load(); }
void set_default_tolerance(double tol) { tolerance_slot().store(tol); }

bool Operator::is_hermitian(double tol) const {
  if (tol < 0.0) tol = default_tolerance();
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool Operator::is_unitary(double tol) const {
  if (tol < 0.0) tol = default_tolerance();
  Operator p = adjoint() * (*this);
  for (int i = 0; i < dim_; ++i) p(i, i) -= 1.0;
  return p.frobenius_norm() <= tol * dim_;
}

bool Operator::all_finite() const {
  for (const cplx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

double Operator::max_abs_diff(const Operator& rhs) const {
  check_same_dim(rhs);
  double m = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i)
    m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
  return m;
}

cplx hs_inner(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  // Tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  return kernels::active().dot_conj(a.data(), b.data(), a.size());
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator anticommutator(const Operator& a, const Operator& b) {
  return a * b + b * a;
}

Operator kron(const Operator& a, const Operator& b) {
  const int na = a.dim(), nb = b.dim();
  Operator r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

}  // namespace leolab
