#include "leolab/dfs3.hpp"

#include <cmath>
#include <stdexcept>

#include "leolab/pauli.hpp"

namespace leolab::dfs3 {

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS6 = std::sqrt(6.0);

Operator build_udfs() {
  Operator u(8, "U_dfs3");
  // columns: |000> .. |111>, qubit 1 = MSB
  u(0, 2) = 1 / kS2;  u(0, 4) = -1 / kS2;                      // (|010>-|100>)/sqrt2
  u(1, 3) = 1 / kS2;  u(1, 5) = -1 / kS2;                      // (|011>-|101>)/sqrt2
  u(2, 1) = 2 / kS6;  u(2, 2) = -1 / kS6; u(2, 4) = -1 / kS6;  // (2|001>-|010>-|100>)/sqrt6
  u(3, 3) = 1 / kS6;  u(3, 5) = 1 / kS6;  u(3, 6) = -2 / kS6;  // (|011>+|101>-2|110>)/sqrt6
  u(4, 0) = 1.0;                                               // |000>
  u(5, 1) = 1 / kS3;  u(5, 2) = 1 / kS3;  u(5, 4) = 1 / kS3;   // (|001>+|010>+|100>)/sqrt3
  u(6, 3) = 1 / kS3;  u(6, 5) = 1 / kS3;  u(6, 6) = 1 / kS3;   // (|011>+|101>+|110>)/sqrt3
  u(7, 7) = 1.0;                                               // |111>
  return u;
}

struct BasisBuilder {
  DfsBasis b;

  void add(std::string name, std::string tilde_form, ErrorClass cls,
           char logical_factor, Operator adapted) {
    BasisElement e;
    e.name = std::move(name);
    e.tilde_form = std::move(tilde_form);
    e.cls = cls;
    e.logical_factor = logical_factor;
    e.op = leak::from_adapted(adapted, b.partition);
    e.adapted = std::move(adapted);
    e.hs_norm = e.op.frobenius_norm();
    b.elements.push_back(std::move(e));
  }

  // raw tilde product, name = display form
  void add_raw(const std::string& codes, ErrorClass cls, char logical_factor = 'I') {
    add(tilde_name(codes), tilde_name(codes), cls, logical_factor,
        tilde_product(codes));
  }
};

DfsBasis build_basis() {
  BasisBuilder bb;
  bb.b.n = 3;
  bb.b.udfs = udfs();
  bb.b.partition = partition();

  // identity
  bb.add("I", "III", ErrorClass::Identity, 'I', tilde_product("III"));

  // logical sigma-bars, projector-normalized as displayed
  bb.add("sigma_x_bar", "(I+Z)XI/2", ErrorClass::Logical, 'X', tilde_product("pXI"));
  bb.add("sigma_y_bar", "(I+Z)YI/2", ErrorClass::Logical, 'Y', tilde_product("pYI"));
  bb.add("sigma_z_bar", "(I+Z)ZI/2", ErrorClass::Logical, 'Z', tilde_product("pZI"));

  // their complement-side analogues; sigma_z_perp is modified to stay
  // orthogonal to S_Z
  bb.add("sigma_x_perp", "(I-Z)XI", ErrorClass::OrthoLogical, 'I', tilde_product("-XI"));
  bb.add("sigma_y_perp", "(I-Z)YI", ErrorClass::OrthoLogical, 'I', tilde_product("-YI"));
  bb.add("sigma_z_perp", "2IIZ-(I-Z)ZI", ErrorClass::OrthoLogical, 'I',
         tilde_product("IIZ") * 2.0 - tilde_product("-ZI"));

  // normalized collective generators, stored as U S_alpha U^dag / sqrt(6)
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
    const char sym = ax == Axis::X ? 'X' : ax == Axis::Y ? 'Y' : 'Z';
    Operator s = collective(3, ax) * (1.0 / kS6);
    bb.add(std::string("S_") + sym, std::string("S_") + sym + "/sqrt6",
           ErrorClass::Collective, 'I', leak::to_adapted(s, bb.b.partition));
  }

  // SO(4) completions of the collective X and Y directions: stabilizer
  // elements, hard-coded to the printed coefficients. The Y family carries
  // the sign flip on the XY primitive required for orthogonality to the
  // transformed S_y (see tests/test_dfs3.cpp for the numeric confirmation).
  const Operator u1 = tilde_product("pIX"), u2 = tilde_product("qIX"),
                 u3 = tilde_product("qXX"), u4 = tilde_product("qYY");
  bb.add("S_X1", "SO(4) completion of S_X, column 2", ErrorClass::Stabilizer, 'I',
         u1 * (1 / std::sqrt(30.0)) + u2 * (1 / std::sqrt(10.0)) +
             u3 * (1 / std::sqrt(30.0)) - u4 * std::sqrt(5.0 / 6.0));
  bb.add("S_X2", "SO(4) completion of S_X, column 3", ErrorClass::Stabilizer, 'I',
         u1 * (-kS3 / 2) + u2 * 0.5);
  bb.add("S_X3", "SO(4) completion of S_X, column 4", ErrorClass::Stabilizer, 'I',
         u1 * (-1 / (2 * std::sqrt(5.0))) - u2 * (0.5 * std::sqrt(3.0 / 5.0)) +
             u3 * (2 / std::sqrt(5.0)));

  const Operator v1 = tilde_product("pIY"), v2 = tilde_product("qIY"),
                 v3 = tilde_product("qXY"), v4 = tilde_product("qYX");
  bb.add("S_Y1", "SO(4) completion of S_Y, column 2", ErrorClass::Stabilizer, 'I',
         v1 * (1 / std::sqrt(30.0)) + v2 * (1 / std::sqrt(10.0)) -
             v3 * (1 / std::sqrt(30.0)) - v4 * std::sqrt(5.0 / 6.0));
  bb.add("S_Y2", "SO(4) completion of S_Y, column 3", ErrorClass::Stabilizer, 'I',
         v1 * (-kS3 / 2) + v2 * 0.5);
  bb.add("S_Y3", "SO(4) completion of S_Y, column 4", ErrorClass::Stabilizer, 'I',
         v1 * (-1 / (2 * std::sqrt(5.0))) - v2 * (0.5 * std::sqrt(3.0 / 5.0)) -
             v3 * (2 / std::sqrt(5.0)));

  // remaining diagonal collective directions
  bb.add_raw("ZIZ", ErrorClass::Collective);
  bb.add_raw("ZII", ErrorClass::Collective);

  // annihilators of the DFS
  for (const char* codes : {"-XZ", "-YZ", "-ZX", "-ZY", "-ZZ"})
    bb.add_raw(codes, ErrorClass::OrthoAnnihilator);

  // logical x collective products (mix the mu factors of the code)
  for (char a : {'X', 'Y', 'Z'})
    for (char c : {'X', 'Y', 'Z'})
      bb.add_raw(std::string("+") + a + c, ErrorClass::LogicalCollectiveProduct, a);

  // 32 leakage directions: X or Y in the J slot
  for (char j : {'X', 'Y'})
    for (char a : {'I', 'X', 'Y', 'Z'})
      for (char c : {'I', 'X', 'Y', 'Z'})
        bb.add_raw(std::string(1, j) + a + c, ErrorClass::Leakage);

  if (bb.b.elements.size() != 64)
    throw std::logic_error("dfs3: basis element count != 64");
  return std::move(bb.b);
}

}  // namespace

Operator udfs() {
  static const Operator u = build_udfs();
  return u;
}

BlockPartition partition() { return BlockPartition{8, 4, udfs()}; }

LogicalOps logical_ops() {
  const Operator e12 = exchange(3, 1, 2), e13 = exchange(3, 1, 3),
                 e23 = exchange(3, 2, 3);
  Operator x = (e23 - e13) * (1.0 / kS3);
  Operator z = (e13 + e23 - e12 * 2.0) * (1.0 / 3.0);
  Operator y = commutator(z, x) * cplx(0.0, -0.5);  // [Z,X]/(2i)
  x.set_label("X_bar");
  y.set_label("Y_bar");
  z.set_label("Z_bar");
  return {std::move(x), std::move(y), std::move(z)};
}

Leo canonical_leo() {
  Result<Leo> r = leak::make_canonical_leo(logical_ops().z, partition());
  if (!r.ok())
    throw std::logic_error("dfs3::canonical_leo: Z-bar rejected: " +
                           r.rejection->detail);
  return *r;
}

const DfsBasis& basis() {
  static const DfsBasis b = build_basis();
  return b;
}

bool verify_stabilizer(const Operator& op, double tol) {
  if (tol < 0.0) tol = default_tolerance();
  if (op.dim() != 8) throw std::invalid_argument("verify_stabilizer: need an 8x8 operator");
  const BlockPartition p = partition();
  const BlockSplit s = leak::block_partition(leak::to_adapted(op, p), p);
  if (s.leakage_norm() > tol) return false;
  // code block must be I_lambda ⊗ M_mu: no weight on lambda-nontrivial Paulis
  for (char l : {'X', 'Y', 'Z'})
    for (char m : {'I', 'X', 'Y', 'Z'}) {
      const Operator probe = tilde_product(std::string(1, l) + m);
      cplx w(0.0, 0.0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w += std::conj(probe(i, j)) * s.code(i, j);
      if (std::abs(w) / 4.0 > tol) return false;
    }
  return true;
}

}  // namespace leolab::dfs3
