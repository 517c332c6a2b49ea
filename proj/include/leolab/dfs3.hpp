#pragma once

// The 3-qubit decoherence-free subsystem: one logical qubit in the two
// J = 1/2 irreps of three spins, gated by Heisenberg exchange. Provides the
// change-of-basis unitary, exchange-built logical operators, the canonical
// LEO, and the classified 64-element operator basis.

#include "leolab/dfs_basis.hpp"
#include "leolab/leakage.hpp"
#include "leolab/operator.hpp"

namespace leolab::dfs3 {

// Rows, in order: |1/2,lambda=0,mu=+-1/2>, |1/2,1,+-1/2>, then the J=3/2
// quadruplet with mu = 3/2, 1/2, -1/2, -3/2.
Operator udfs();

// code = the first four adapted states (the two J=1/2 irreps).
BlockPartition partition();

struct LogicalOps {
  Operator x, y, z;
};

// X = (E23 - E13)/sqrt(3), Z = (E13 + E23 - 2 E12)/3, Y = [Z, X]/(2i).
LogicalOps logical_ops();

// exp(-i pi Z-bar) = -I on the code, +I on the J=3/2 subspace.
Leo canonical_leo();

// The classified 64-element trace-orthogonal basis; built once, immutable.
const DfsBasis& basis();

// True iff op acts as the identity on the logical (lambda) factor of the code
// and has no code <-> complement coupling. The mu factor may do anything: a
// stabilizer element moves only the gauge.
bool verify_stabilizer(const Operator& op, double tol = -1.0);

}  // namespace leolab::dfs3
