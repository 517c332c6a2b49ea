#pragma once

// Classified, trace-orthogonal operator bases adapted to a DFS encoding.
// Elements are stored in the normalization of the source displays (some carry
// a 1/2 projector factor, some are raw (I±Z) products; the tilde_form string
// says which), together with their Frobenius norms so projections can use an
// orthonormal frame.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "leolab/leakage.hpp"
#include "leolab/operator.hpp"

namespace leolab {

enum class ErrorClass {
  Identity,
  Logical,
  OrthoLogical,
  Collective,
  Stabilizer,
  OrthoAnnihilator,
  LogicalCollectiveProduct,
  Leakage,
};

std::string_view to_string(ErrorClass c);

struct BasisElement {
  std::string name;        // addressable id, e.g. "(I+Z)YX" or "S_X1"
  std::string tilde_form;  // display form, e.g. "(I+Z)YX" or "(I+Z)XI/2"
  ErrorClass cls = ErrorClass::Identity;
  char logical_factor = 'I';  // lambda-slot symbol for code-acting elements
  Operator op;                // computational basis
  Operator adapted;           // DFS (tilde) basis
  double hs_norm = 0.0;
};

struct DfsBasis {
  int n = 0;  // qubit count
  Operator udfs;
  BlockPartition partition;
  std::vector<BasisElement> elements;

  const BasisElement* find(std::string_view name) const;
  // HS-projection coefficient of op onto the stored (display-normalized)
  // element: hs(e, op) / ||e||^2.
  cplx coefficient(std::string_view name, const Operator& op) const;
};

struct Classification {
  std::vector<cplx> coefficients;  // one per element, display convention
  std::set<ErrorClass> summary;    // classes with weight above tolerance
  double residual = 0.0;           // ||op - sum c_i e_i||_F
};

// Project a computational-basis operator onto the basis. Throws on dimension
// mismatch.
Classification classify(const Operator& op, const DfsBasis& basis,
                        double tol = -1.0);

// Tilde products. Factor codes, one per tensor slot:
//   'I','X','Y','Z'  Pauli factors
//   '+'  I+Z (raw)        '-'  I-Z (raw)
//   'p'  (I+Z)/2          'q'  (I-Z)/2
Operator tilde_product(const std::string& codes);
std::string tilde_name(const std::string& codes);

}  // namespace leolab
