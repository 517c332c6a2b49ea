#pragma once

// Pauli strings, exchange operators and collective-error generators on
// n-qubit registers.
//
// Basis conventions: qubit 1 is the most significant bit of the
// computational-basis index, |0> = |spin up (m = +1/2)> and
// |1> = |spin down (m = -1/2)>.

#include <string>
#include <vector>

#include "leolab/operator.hpp"

namespace leolab {

enum class Axis { X, Y, Z };

// A coefficient times a tensor product of single-qubit factors from
// {I, X, Y, Z}, one per qubit (e.g. "XIZ" on three qubits).
struct PauliString {
  std::string factors;  // characters from "IXYZ", length = qubit count
  cplx coefficient{1.0, 0.0};

  int qubit_count() const { return static_cast<int>(factors.size()); }
};

// A formal linear combination of Pauli strings on a common register.
struct OperatorSum {
  std::vector<PauliString> terms;

  OperatorSum& add(cplx coefficient, std::string factors);
  int qubit_count() const;
  Operator to_operator() const;
};

// Dense 2^n x 2^n matrix of a Pauli string; throws on length mismatch or a
// factor outside "IXYZ".
Operator pauli(int n, const PauliString& s);
Operator pauli(int n, const std::string& factors, cplx coefficient = {1.0, 0.0});

// The single-qubit Pauli matrix for an axis.
Operator pauli_matrix(Axis axis);

// Heisenberg exchange E_ij = (I + sigma_i . sigma_j) / 2, the SWAP of qubits
// i and j (1-based, i < j <= n). Built directly as the permutation matrix;
// the Pauli-sum identity is checked in the tests as an independent route.
Operator exchange(int n, int i, int j);

// Collective error generator S_alpha = sum_i sigma_i^alpha (unnormalized).
Operator collective(int n, Axis axis);

// Total spin squared S^2 = (sum_i vec(sigma_i))^2 / 4, with eigenvalues
// S(S+1).
Operator total_spin_squared(int n);

}  // namespace leolab
