#include "leolab/dfs4.hpp"

#include <cmath>
#include <stdexcept>

#include "leolab/pauli.hpp"

namespace leolab::dfs4 {

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);

std::vector<cplx> ket(std::initializer_list<std::pair<int, double>> amps) {
  std::vector<cplx> v(16);
  for (auto [idx, a] : amps) v[idx] = a;
  return v;
}

States build_states() {
  States s;
  const double h = 0.5, r2 = 1 / kS2, r12 = 1 / std::sqrt(12.0), r6 = 1 / std::sqrt(6.0);
  // basis index = bits b1 b2 b3 b4, qubit 1 = MSB
  s.vectors = {
      ket({{5, h}, {10, h}, {6, -h}, {9, -h}}),                             // S0
      ket({{3, 2 * r12}, {12, 2 * r12}, {6, -r12}, {9, -r12}, {5, -r12}, {10, -r12}}),  // S1
      ket({{4, h}, {8, h}, {1, -h}, {2, -h}}),                              // T1 +1
      ket({{12, r2}, {3, -r2}}),                                            // T1 0
      ket({{14, h}, {13, h}, {11, -h}, {7, -h}}),                           // T1 -1
      ket({{1, r2}, {2, -r2}}),                                             // T2 +1
      ket({{9, h}, {5, h}, {10, -h}, {6, -h}}),                             // T2 0
      ket({{13, r2}, {14, -r2}}),                                           // T2 -1
      ket({{4, r2}, {8, -r2}}),                                             // T3 +1
      ket({{6, h}, {5, h}, {10, -h}, {9, -h}}),                             // T3 0
      ket({{7, r2}, {11, -r2}}),                                            // T3 -1
      ket({{0, 1.0}}),                                                      // Q +2
      ket({{8, h}, {4, h}, {2, h}, {1, h}}),                                // Q +1
      ket({{12, r6}, {10, r6}, {9, r6}, {6, r6}, {5, r6}, {3, r6}}),        // Q 0
      ket({{7, h}, {11, h}, {13, h}, {14, h}}),                             // Q -1
      ket({{15, 1.0}}),                                                     // Q -2
  };
  s.names = {"S0",   "S1",   "T1_+1", "T1_0", "T1_-1", "T2_+1", "T2_0", "T2_-1",
             "T3_+1", "T3_0", "T3_-1", "Q_+2", "Q_+1",  "Q_0",  "Q_-1", "Q_-2"};
  s.udfs = Operator(16, "U_dfs4");
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) s.udfs(i, j) = s.vectors[i][j];
  return s;
}

// Extracts the code-block Pauli coefficient of adapted (2x2 top-left block
// onto sigma) and the norm of everything else.
struct CodeProbe {
  cplx weight;      // hs(sigma, code block)/2
  double leftover;  // ||adapted - weight * diag(sigma, 0)||_F
};

CodeProbe probe_code_pauli(const Operator& adapted, const Operator& sigma) {
  cplx w(0.0, 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) w += std::conj(sigma(i, j)) * adapted(i, j);
  w /= 2.0;
  Operator rest = adapted;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) rest(i, j) -= w * sigma(i, j);
  return {w, rest.frobenius_norm()};
}

DfsBasis build_basis() {
  DfsBasis b;
  b.n = 4;
  b.udfs = udfs();
  b.partition = partition();

  auto add = [&b](std::string name, std::string tilde_form, ErrorClass cls,
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
  };

  // Code-block quadruples (I+Z)^3 O, stored Pauli-normalized (||.||^2 = 16)
  // so reported coefficients line up with the displayed decompositions.
  const double scale = 2.0 * kS2;  // ||diag(sigma,0_14)|| = sqrt(2); 2sqrt2 * that = 4
  for (char o : {'I', 'X', 'Y', 'Z'}) {
    Operator t = tilde_product(std::string("ppp") + o) * scale;
    const ErrorClass cls = o == 'I' ? ErrorClass::Stabilizer : ErrorClass::Logical;
    add(tilde_name(std::string("+++") + o), tilde_name(std::string("+++") + o),
        cls, o, std::move(t));
  }

  // Leakage directions |i><j| + h.c. between code state i and complement
  // state j, X-type (real) and Y-type (imaginary), sqrt(2)-normalized.
  const auto& nm = states().names;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 16; ++j) {
      Operator x(16), y(16);
      x(i, j) = 1.0;
      x(j, i) = 1.0;
      y(i, j) = cplx(0.0, -1.0);
      y(j, i) = cplx(0.0, 1.0);
      add("L[X](" + nm[i] + "," + nm[j] + ")", "|i><j| + |j><i|",
          ErrorClass::Leakage, 'I', std::move(x));
      add("L[Y](" + nm[i] + "," + nm[j] + ")", "-i|i><j| + i|j><i|",
          ErrorClass::Leakage, 'I', std::move(y));
    }

  // Complement block: Hermitian matrix units on the 14 C-perp states.
  for (int i = 2; i < 16; ++i) {
    Operator d(16);
    d(i, i) = 1.0;
    add("P(" + nm[i] + ")", "|i><i|", ErrorClass::OrthoAnnihilator, 'I',
        std::move(d));
  }
  for (int i = 2; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j) {
      Operator x(16), y(16);
      x(i, j) = 1.0;
      x(j, i) = 1.0;
      y(i, j) = cplx(0.0, -1.0);
      y(j, i) = cplx(0.0, 1.0);
      add("C[X](" + nm[i] + "," + nm[j] + ")", "|i><j| + |j><i|",
          ErrorClass::OrthoAnnihilator, 'I', std::move(x));
      add("C[Y](" + nm[i] + "," + nm[j] + ")", "-i|i><j| + i|j><i|",
          ErrorClass::OrthoAnnihilator, 'I', std::move(y));
    }

  if (b.elements.size() != 256)
    throw std::logic_error("dfs4: basis element count != 256");
  return b;
}

}  // namespace

const States& states() {
  static const States s = build_states();
  return s;
}

Operator udfs() { return states().udfs; }

BlockPartition partition() { return BlockPartition{16, 2, udfs()}; }

LogicalOps logical_ops() {
  const Operator e12 = exchange(4, 1, 2), e13 = exchange(4, 1, 3),
                 e23 = exchange(4, 2, 3);
  Operator x = (e23 - e13) * (1.0 / kS3);
  Operator z = -e12;
  Operator y = commutator(z, x) * cplx(0.0, -0.5);
  x.set_label("X_bar");
  y.set_label("Y_bar");
  z.set_label("Z_bar");
  return {std::move(x), std::move(y), std::move(z)};
}

Operator spin_squared_half() {
  Operator acc(16);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      // sigma_i . sigma_j = 2 E_ij - I
      acc += exchange(4, i, j) * 2.0 - Operator::identity(16);
    }
  return ((Operator::identity(16) * 12.0 + acc * 2.0) * 0.125).set_label("S^2/2");
}

Leo leo_s2() {
  Result<Leo> r = leak::make_generalized_leo(spin_squared_half(), partition());
  if (!r.ok())
    throw std::logic_error("dfs4::leo_s2: S^2/2 rejected: " + r.rejection->detail);
  return *r;
}

LogicalOps modified_logical_ops() {
  LogicalOps ops = logical_ops();
  const Operator s2h = spin_squared_half();
  ops.x += s2h;
  ops.y += s2h;
  ops.z += s2h;
  ops.x.set_label("X_bar'");
  ops.y.set_label("Y_bar'");
  ops.z.set_label("Z_bar'");
  return ops;
}

Leo leo_modified_z() {
  Result<Leo> r = leak::make_generalized_leo(modified_logical_ops().z, partition());
  if (!r.ok())
    throw std::logic_error("dfs4::leo_modified_z: Z-bar' rejected: " +
                           r.rejection->detail);
  return *r;
}

CanonicalOps canonical_ops() {
  // (I - E_ij) is twice the singlet projector of the pair, so these products
  // are rank-1 projectors onto pairing states of the two-dimensional J = 0
  // space; the combinations below land on pure sigma_x / sigma_z code blocks
  // with no complement action at all.
  const Operator i16 = Operator::identity(16);
  const Operator a13 = i16 - exchange(4, 1, 3);
  const Operator a24 = i16 - exchange(4, 2, 4);
  const Operator a23 = i16 - exchange(4, 2, 3);
  const Operator a14 = i16 - exchange(4, 1, 4);
  const Operator a34 = i16 - exchange(4, 3, 4);
  const Operator a12 = i16 - exchange(4, 1, 2);

  Operator poly_x = a13 * a24 - a23 * a14;
  Operator poly_z = (a34 * a12) * 2.0 - a13 * a24 - a23 * a14;

  const BlockPartition p = partition();
  CanonicalOps out;

  auto normalize = [&p](const Operator& poly, const Operator& sigma,
                        double& scale) {
    const Operator adapted = leak::to_adapted(poly, p);
    CodeProbe probe = probe_code_pauli(adapted, sigma);
    if (std::abs(probe.weight.imag()) > 1e-9 || std::abs(probe.weight) < 1e-9)
      throw std::logic_error("dfs4::canonical_ops: unexpected code-block weight");
    scale = probe.weight.real();
    if (probe.leftover > 1e-8 * std::abs(scale))
      throw std::logic_error(
          "dfs4::canonical_ops: exchange polynomial is not proportional to a "
          "canonical gate (leftover " + std::to_string(probe.leftover) + ")");
    return poly * (1.0 / scale);
  };

  out.x = normalize(poly_x, pauli_matrix(Axis::X), out.x_poly_scale).set_label("sigma_x^c");
  out.z = normalize(poly_z, pauli_matrix(Axis::Z), out.z_poly_scale).set_label("sigma_z^c");
  return out;
}

const DfsBasis& basis() {
  static const DfsBasis b = build_basis();
  return b;
}

}  // namespace leolab::dfs4
