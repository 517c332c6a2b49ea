#pragma once

// Dense complex square matrices with dimension metadata: the currency every
// other module trades in. Operators are plain values; nothing here mutates
// shared state, so const Operators are safe to share across threads.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leolab/kernels.hpp"

namespace leolab {

using cplx = std::complex<double>;

// Default tolerance for numerical equality (spec'd 1e-10). Overridable via
// the LEOLAB_TOL environment variable or set_default_tolerance().
double default_tolerance();
void set_default_tolerance(double tol);

class Operator {
 public:
  Operator() : dim_(0) {}

  explicit Operator(int dim, std::string label = {})
      : dim_(dim), a_(static_cast<std::size_t>(dim) * dim), label_(std::move(label)) {
    if (dim <= 0) throw std::invalid_argument("Operator: dim must be positive");
  }

  Operator(int dim, std::vector<cplx> entries, std::string label = {})
      : dim_(dim), a_(std::move(entries)), label_(std::move(label)) {
    if (dim <= 0) throw std::invalid_argument("Operator: dim must be positive");
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
      throw std::invalid_argument("Operator: entry count does not match dim");
  }

  static Operator identity(int dim, std::string label = "I") {
    Operator op(dim, std::move(label));
    for (int i = 0; i < dim; ++i) op(i, i) = 1.0;
    return op;
  }

  static Operator zero(int dim) { return Operator(dim); }

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  Operator& set_label(std::string label) {
    label_ = std::move(label);
    return *this;
  }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }
  std::size_t size() const { return a_.size(); }

  Operator& operator+=(const Operator& rhs) {
    check_same_dim(rhs);
    kernels::active().axpy(a_.data(), cplx(1.0, 0.0), rhs.a_.data(), a_.size());
    return *this;
  }
  Operator& operator-=(const Operator& rhs) {
    check_same_dim(rhs);
    kernels::active().axpy(a_.data(), cplx(-1.0, 0.0), rhs.a_.data(), a_.size());
    return *this;
  }
  Operator& operator*=(cplx s) {
    kernels::active().scale(a_.data(), s, a_.size());
    return *this;
  }

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, cplx s) { return a *= s; }
  friend Operator operator*(cplx s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, double s) { return a *= cplx(s, 0.0); }
  friend Operator operator*(double s, Operator a) { return a *= cplx(s, 0.0); }
  friend Operator operator-(Operator a) { return a *= cplx(-1.0, 0.0); }

  friend Operator operator*(const Operator& a, const Operator& b) {
    a.check_same_dim(b);
    Operator c(a.dim_);
    kernels::active().matmul(c.a_.data(), a.a_.data(), b.a_.data(), a.dim_);
    return c;
  }

  Operator adjoint() const {
    Operator r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  Operator transpose() const {
    Operator r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  cplx trace() const {
    cplx t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    return std::sqrt(kernels::active().norm_sq(a_.data(), a_.size()));
  }

  // y = A x
  std::vector<cplx> apply(const std::vector<cplx>& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("Operator::apply: vector length mismatch");
    std::vector<cplx> y(x.size());
    kernels::active().matvec(y.data(), a_.data(), x.data(), dim_);
    return y;
  }

  bool is_hermitian(double tol = -1.0) const;
  bool is_unitary(double tol = -1.0) const;
  bool all_finite() const;

  // max_ij |a_ij - b_ij|
  double max_abs_diff(const Operator& rhs) const;

 private:
  void check_same_dim(const Operator& rhs) const {
    if (dim_ != rhs.dim_)
      throw std::invalid_argument("Operator: dimension mismatch (" +
                                  std::to_string(dim_) + " vs " +
                                  std::to_string(rhs.dim_) + ")");
  }

  int dim_;
  std::vector<cplx> a_;
  std::string label_;
};

// Tr(a^dagger b), unnormalized Hilbert-Schmidt inner product.
cplx hs_inner(const Operator& a, const Operator& b);

// ab - ba and ab + ba.
Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

// Kronecker product; dim(result) = dim(a) * dim(b).
Operator kron(const Operator& a, const Operator& b);

}  // namespace leolab
