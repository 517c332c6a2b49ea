#pragma once

// The 4-qubit decoherence-free subspace: one logical qubit in the two total
// singlets of four spins, with three triplet multiplets and a quintuplet as
// the orthogonal complement. The natural exchange gates are not canonical
// here; the LEO comes from the generalized construction via S^2/2.

#include <vector>

#include "leolab/dfs_basis.hpp"
#include "leolab/leakage.hpp"
#include "leolab/operator.hpp"

namespace leolab::dfs4 {

struct States {
  // 16 computational-basis vectors in the order
  // S0, S1, T1(+1,0,-1), T2(...), T3(...), Q(+2..-2)
  std::vector<std::vector<cplx>> vectors;
  std::vector<std::string> names;
  Operator udfs;  // rows = the states above
};

const States& states();
Operator udfs();
BlockPartition partition();  // {16, 2, udfs}

struct LogicalOps {
  Operator x, y, z;
};

// X = (E23 - E13)/sqrt(3), Z = -E12, Y = [Z, X]/(2i). Not canonical: the
// complement eigenvalues of Z are +-1, not 0.
LogicalOps logical_ops();

// S^2/2 = (12 + 2 sum_{i<j} sigma_i . sigma_j)/8: 0 on the code, 1 on the
// triplets, 3 on the quintuplet. Built from exchange terms only.
Operator spin_squared_half();

// exp(-i pi S^2/2) = diag(I_2, -I_14): an LEO with overall phase -1.
Leo leo_s2();

// X' = X + S^2/2 etc: odd integer spectrum on the code, even on the
// complement, so exp(-i pi Z') is an LEO of the same form.
LogicalOps modified_logical_ops();
Leo leo_modified_z();

struct CanonicalOps {
  Operator x, z;
  double x_poly_scale = 0.0;  // measured scale of the printed exchange
  double z_poly_scale = 0.0;  // polynomial relative to the unit-block form
};

// Canonical logical gates (simultaneously code projectors), built from the
// 4-body exchange polynomials and rescaled so the adapted form is exactly
// diag(sigma_i, 0_14). The measured polynomial scales are kept for reporting.
CanonicalOps canonical_ops();

// The classified 256-element basis: 4 code-block elements addressable by
// their tilde-quadruple names, 56 leakage directions, and a matrix-unit
// completion of the complement block.
const DfsBasis& basis();

}  // namespace leolab::dfs4
