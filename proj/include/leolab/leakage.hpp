#pragma once

// Code/leakage block structure, the Z2 grading induced by a leakage
// elimination operator (LEO), and the canonical / generalized LEO
// constructors.
//
// An LEO is a unitary equal, up to a global phase, to -I on the code block
// and +I on its orthogonal complement. It anticommutes with every operator
// supported purely on the off-diagonal (leakage) blocks and commutes with
// every block-diagonal operator.

#include <optional>
#include <string>
#include <vector>

#include "leolab/operator.hpp"

namespace leolab {

// An ordered split of a total space into code (first code_dim adapted-basis
// states) and its complement. basis_change rows are the adapted basis states
// in the computational basis: op_adapted = U op U^dagger.
struct BlockPartition {
  int total_dim = 0;
  int code_dim = 0;
  Operator basis_change;

  int perp_dim() const { return total_dim - code_dim; }
};

// Rectangular leakage block.
struct Block {
  int rows = 0, cols = 0;
  std::vector<cplx> a;

  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const cplx& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
  double frobenius_norm() const {
    return std::sqrt(kernels::active().norm_sq(a.data(), a.size()));
  }
};

// The four blocks of an operator written in the adapted basis:
//   [ code  upper ]      B: code x code      upper (D): code x perp
//   [ lower perp  ]      C: perp x perp      lower (F): perp x code
struct BlockSplit {
  Operator code;
  Operator perp;
  Block upper;
  Block lower;

  double leakage_norm() const {
    return std::sqrt(upper.frobenius_norm() * upper.frobenius_norm() +
                     lower.frobenius_norm() * lower.frobenius_norm());
  }
};

enum class GradedClass { Even, Odd, Mixed };

struct Leo {
  Operator unitary;  // computational basis
  cplx phase;        // unitary = phase * (-I_code ⊕ I_perp) in the adapted basis
  BlockPartition partition;
  double even_residual = 0.0;  // max ||[R, E]||_F over block-diagonal probes
  double odd_residual = 0.0;   // max ||{R, L}||_F over pure-leakage probes
};

// Why a constructor refused its input.
struct Rejection {
  std::string precondition;  // which contract failed
  std::string detail;        // residual / offending eigenvalue, human-readable
  double residual = 0.0;
  std::optional<double> eigenvalue;
};

template <typename T>
struct Result {
  std::optional<T> value;
  std::optional<Rejection> rejection;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

namespace leak {

// op must already be written in the adapted basis; slicing is exact index
// bookkeeping, so assemble(block_partition(op)) == op bit for bit.
BlockSplit block_partition(const Operator& op, const BlockPartition& p);
Operator assemble(const BlockSplit& s, const BlockPartition& p);

// Change of basis helpers: computational <-> adapted.
Operator to_adapted(const Operator& op, const BlockPartition& p);
Operator from_adapted(const Operator& op, const BlockPartition& p);

GradedClass grade(const Operator& op, const Leo& leo, double tol = -1.0);

// R_L = exp(-i pi sigma_L) for a canonical logical operation: sigma_L
// Hermitian, sigma_L^2 = Pi_C and sigma_L = 0 on the complement. Inputs in
// the computational basis.
Result<Leo> make_canonical_leo(const Operator& sigma_L, const BlockPartition& p,
                               double tol = -1.0);

// R_L = exp(-i pi h) for block-diagonal h whose code spectrum consists of
// integers of one parity and whose complement spectrum consists of integers
// of the opposite parity. Integer detection uses integer_tol (looser than the
// matrix tolerance; eigenvalues accumulate error).
Result<Leo> make_generalized_leo(const Operator& h, const BlockPartition& p,
                                 double tol = -1.0, double integer_tol = 1e-8);

bool is_in_commutant(const Operator& op, const std::vector<Operator>& generators,
                     double tol = -1.0);

}  // namespace leak
}  // namespace leolab
