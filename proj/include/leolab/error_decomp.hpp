#pragma once

// Anisotropic-exchange (spin-orbit) error Hamiltonians: coupling-tensor
// splits, the Dzyaloshinski-Moriya and single-axis product errors, and their
// decompositions over the classified DFS bases.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "leolab/dfs_basis.hpp"
#include "leolab/operator.hpp"

namespace leolab::errors {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

struct CouplingTensor {
  int i = 1, j = 2;  // qubit pair, 1-based
  Mat3 g{};          // g^{alpha beta}
};

struct TensorSplit {
  double scalar = 0.0;       // g0 in g0 delta^{ab}
  Vec3 dm{};                 // beta in sum_c eps^{abc} beta^c
  Mat3 symmetric{};          // symmetric traceless remainder
};

// Unique scalar + antisymmetric + symmetric-traceless split;
// beta^c = (1/2) sum_{ab} eps^{abc} g^{ab}. Reconstruction is exact.
TensorSplit split_tensor(const CouplingTensor& t);
Mat3 reassemble(const TensorSplit& s);

// sum_{ab} g^{ab} sigma_i^a sigma_j^b on n qubits.
Operator coupling_operator(const CouplingTensor& t, int n);

// beta . (sigma_i x sigma_j), with (sigma_i x sigma_j)^c =
// eps^{cab} sigma_i^a sigma_j^b.
Operator dm_error(const Vec3& beta, int i, int j, int n);

// (sigma_i . gamma_i)(sigma_j . gamma_j).
Operator product_error(const Vec3& gamma_i, const Vec3& gamma_j, int i, int j,
                       int n);

struct Term {
  std::string name;
  std::string tilde_form;
  ErrorClass cls = ErrorClass::Identity;
  char logical_factor = 'I';
  cplx coefficient;
};

struct DecompositionReport {
  std::vector<Term> full;       // every coefficient above tolerance
  std::vector<Term> surviving;  // classes in `drop` removed
  // surviving terms with stabilizer/collective weight removed as well: what
  // still acts on the encoded qubit once leakage is eliminated
  std::vector<Term> surviving_after_stabilizer;
  std::map<std::string, double> class_weights;  // sum of squared HS weights
  double residual = 0.0;        // full-reconstruction residual
  std::set<ErrorClass> dropped;
  std::map<std::string, std::string> metadata;
};

DecompositionReport decompose_error(const Operator& op, const DfsBasis& basis,
                                    const std::set<ErrorClass>& drop,
                                    double tol = -1.0);

// True iff every surviving code-acting term (class logical or
// logical-collective-product, ignoring stabilizer and collective weight) has
// logical factor Y. exclude_term6 ignores the (I+Z)ZI direction, i.e. the
// sigma_z_bar coefficient, the "term 6" of the bilinear decomposition.
bool logical_y_dominance_check(const DecompositionReport& report,
                               bool exclude_term6 = false, double tol = -1.0);

// Checks the displayed decompositions: the three cross-error coefficients
// (1/sqrt3) beta^{x,y,z} for the 3-qubit DM error, the ten bilinear terms
// including -(gamma1.gamma2)/3 on (I+Z)ZI, and the 4-qubit one- and two-term
// results with coefficients -1/(3 sqrt2), 1/(6 sqrt2), 1/(2 sqrt6). Prints
// one line per identity; returns false if any misses 1e-10.
struct PaperCheck {
  bool ok = true;
  std::vector<std::string> lines;
};
PaperCheck paper_check(double tol = 1e-10);

}  // namespace leolab::errors
