// Acceptance suite: one test case per criterion, each printing a single
// [criterion N] PASS/FAIL line with the governing residual. Tolerances are
// pinned here, in code.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "leolab/decoupling.hpp"
#include "leolab/dfs3.hpp"
#include "leolab/dfs4.hpp"
#include "leolab/error_decomp.hpp"
#include "leolab/linalg.hpp"
#include "leolab/pauli.hpp"
#include "test_helpers.hpp"

using namespace leolab;
using test::random_hermitian;
using test::random_operator;

namespace {

struct Criterion {
  int number;
  bool ok = true;
  double worst = 0.0;
  std::chrono::steady_clock::time_point start;

  explicit Criterion(int n) : number(n), start(std::chrono::steady_clock::now()) {}

  void bound(double residual, double tol) {
    worst = std::max(worst, residual);
    if (residual > tol) ok = false;
  }
  void require(bool condition) {
    if (!condition) ok = false;
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
  void report(const char* what) const {
    std::printf("[criterion %d] %s  %s (worst residual %.3e, %.2fs)\n", number,
                ok ? "PASS" : "FAIL", what, worst, seconds());
  }
};

Operator structured(const BlockPartition& p, bool diag, bool off, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m(p.total_dim);
  for (int i = 0; i < p.total_dim; ++i)
    for (int j = 0; j <= i; ++j) {
      const bool cross = (i < p.code_dim) != (j < p.code_dim);
      if (cross ? !off : !diag) continue;
      cplx v(gauss(rng), i == j ? 0.0 : gauss(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  return leak::from_adapted(m, p);
}

}  // namespace

TEST_CASE("criterion 1: 3-qubit basis integrity") {
  Criterion c(1);
  const DfsBasis& b = dfs3::basis();
  c.require(b.elements.size() == 64);
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = i + 1; j < b.elements.size(); ++j)
      c.bound(std::abs(hs_inner(b.elements[i].op, b.elements[j].op)), 1e-10);
  for (int s = 0; s < 100; ++s)
    c.bound(classify(random_operator(8, 42000 + s), b).residual, 1e-10);
  c.require(c.seconds() < 1.0);
  c.report("64 trace-orthogonal elements; 100 random operators resynthesized");
  CHECK(c.ok);
}

TEST_CASE("criterion 2: logical-gate identities") {
  Criterion c(2);
  const BlockPartition p3 = dfs3::partition();
  auto ops3 = dfs3::logical_ops();
  Operator want_x(8), want_z(8);
  for (int mu = 0; mu < 2; ++mu) {
    want_x(mu, 2 + mu) = want_x(2 + mu, mu) = 1.0;
    want_z(mu, mu) = 1.0;
    want_z(2 + mu, 2 + mu) = -1.0;
  }
  c.bound(leak::to_adapted(ops3.x, p3).max_abs_diff(want_x), 1e-12);
  c.bound(leak::to_adapted(ops3.z, p3).max_abs_diff(want_z), 1e-12);

  const BlockPartition p4 = dfs4::partition();
  auto ops4 = dfs4::logical_ops();
  Operator xa = leak::to_adapted(ops4.x, p4), za = leak::to_adapted(ops4.z, p4);
  c.bound(std::abs(xa(0, 0)), 1e-12);
  c.bound(std::abs(xa(0, 1) - cplx(1, 0)), 1e-12);
  c.bound(std::abs(xa(1, 0) - cplx(1, 0)), 1e-12);
  c.bound(std::abs(za(0, 0) - cplx(1, 0)), 1e-12);
  c.bound(std::abs(za(1, 1) + cplx(1, 0)), 1e-12);
  c.bound(std::abs(za(0, 1)), 1e-12);
  c.report("U X U+ / U Z U+ displays (3-qubit); sigma_x / sigma_z code blocks (4-qubit)");
  CHECK(c.ok);
}

TEST_CASE("criterion 3: collective-operator identities") {
  Criterion c(3);
  const BlockPartition p = dfs3::partition();
  const double s3 = std::sqrt(3.0);

  Operator sx_claim = tilde_product("pIX") + tilde_product("qIX") * s3 +
                      tilde_product("qXX") + tilde_product("qYY");
  c.bound((leak::to_adapted(collective(3, Axis::X), p) - sx_claim).frobenius_norm(),
          1e-10);
  // XY primitive enters with the numerically confirmed minus sign
  Operator sy_claim = tilde_product("pIY") + tilde_product("qIY") * s3 -
                      tilde_product("qXY") + tilde_product("qYX");
  c.bound((leak::to_adapted(collective(3, Axis::Y), p) - sy_claim).frobenius_norm(),
          1e-10);
  Operator sz_claim = tilde_product("IIZ") + tilde_product("-ZI");
  c.bound((leak::to_adapted(collective(3, Axis::Z), p) - sz_claim).frobenius_norm(),
          1e-10);
  c.report("U S_alpha U+ tilde expansions for alpha = x, y, z");
  CHECK(c.ok);
}

TEST_CASE("criterion 4: SO(4) completion") {
  Criterion c(4);
  const DfsBasis& b = dfs3::basis();
  const char* names[6] = {"S_X1", "S_X2", "S_X3", "S_Y1", "S_Y2", "S_Y3"};
  const double shared_norm = b.find("S_X")->hs_norm;  // the normalized collective
  for (int i = 0; i < 6; ++i) {
    const BasisElement* e = b.find(names[i]);
    c.require(e != nullptr);
    // unit-norm in the common normalization of the family (norm 2, matching
    // S_X/sqrt6), i.e. exactly unit after orthonormalization
    c.bound(std::abs(e->hs_norm - shared_norm), 1e-10);
    for (int j = i + 1; j < 6; ++j)
      c.bound(std::abs(hs_inner(e->op, b.find(names[j])->op)), 1e-10);
    c.bound(std::abs(hs_inner(e->op, b.find("S_X")->op)), 1e-10);
    c.bound(std::abs(hs_inner(e->op, b.find("S_Y")->op)), 1e-10);
    c.require(dfs3::verify_stabilizer(e->op));
  }
  c.report("S_X1..3, S_Y1..3 orthonormal, orthogonal to S_X/S_Y, stabilizers");
  CHECK(c.ok);
}

TEST_CASE("criterion 5: LEO grading for both codes") {
  Criterion c(5);
  const Leo leo3 = dfs3::canonical_leo();
  for (const BasisElement& e : dfs3::basis().elements)
    c.bound(e.cls == ErrorClass::Leakage
                ? anticommutator(leo3.unitary, e.op).frobenius_norm()
                : commutator(leo3.unitary, e.op).frobenius_norm(),
            1e-10);
  const Leo leo4 = dfs4::leo_s2();
  for (const BasisElement& e : dfs4::basis().elements)
    c.bound(e.cls == ErrorClass::Leakage
                ? anticommutator(leo4.unitary, e.op).frobenius_norm()
                : commutator(leo4.unitary, e.op).frobenius_norm(),
            1e-10);
  const Leo leo4b = dfs4::leo_modified_z();
  const cplx rel = leo4b.phase / leo4.phase;
  c.bound((leo4b.unitary - leo4.unitary * rel).frobenius_norm(), 1e-10);
  c.report("{R,L} = 0 on leakage, [R,E] = 0 elsewhere; S^2/2 and Z' LEOs agree");
  CHECK(c.ok);
}

TEST_CASE("criterion 6: canonicity gate") {
  Criterion c(6);
  Result<Leo> ok3 = leak::make_canonical_leo(dfs3::logical_ops().z, dfs3::partition());
  c.require(ok3.ok());

  Result<Leo> bad4 = leak::make_canonical_leo(dfs4::logical_ops().z, dfs4::partition());
  c.require(!bad4.ok());
  c.require(bad4.rejection.has_value() &&
            bad4.rejection->precondition == "sigma_L = 0 on the orthogonal complement");

  auto can = dfs4::canonical_ops();
  const BlockPartition p4 = dfs4::partition();
  Operator want_x(16), want_z(16);
  want_x(0, 1) = want_x(1, 0) = 1.0;
  want_z(0, 0) = 1.0;
  want_z(1, 1) = -1.0;
  c.bound(leak::to_adapted(can.x, p4).max_abs_diff(want_x), 1e-10);
  c.bound(leak::to_adapted(can.z, p4).max_abs_diff(want_z), 1e-10);
  c.report("3-qubit Z accepted; 4-qubit Z rejected with complement diagnostic; "
           "canonical gates transform to diag(sigma_i, 0_14)");
  CHECK(c.ok);
}

TEST_CASE("criterion 7: parity-kick convergence") {
  Criterion c(7);
  const Leo leo = dfs3::canonical_leo();
  const BlockPartition& p = leo.partition;
  Operator h = structured(p, true, false, 11) + structured(p, false, true, 12);
  h *= cplx(4.0 / h.frobenius_norm(), 0.0);

  dd::KickSweep sweep =
      dd::parity_kick_sweep(h, leo, 0.2, {1, 2, 4, 8, 16, 32, 64, 128});
  c.bound(std::abs(sweep.slope + 1.0), 0.15);
  c.bound(sweep.points.back().limit_residual, 1e-3);
  c.require(c.seconds() < 5.0);
  c.report("leakage ~ n^-1 over n = 1..128; limit matches exp(-i H_even t)");
  std::printf("              slope = %.4f, limit residual at n=128 = %.3e\n",
              sweep.slope, sweep.points.back().limit_residual);
  CHECK(c.ok);
}

TEST_CASE("criterion 8: logical-group symmetrization decouples the code") {
  Criterion c(8);
  const BlockPartition p = dfs3::partition();
  auto ops = dfs3::logical_ops();
  for (int s = 0; s < 50; ++s) {
    Operator h = random_hermitian(8, 52000 + s);
    Operator out = dd::symmetrize_logical_group(h, ops.x, ops.y, ops.z, p);
    BlockSplit sp = leak::block_partition(leak::to_adapted(out, p), p);
    BlockSplit in = leak::block_partition(leak::to_adapted(h, p), p);
    Operator want(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const cplx m = (in.code(i, j) + in.code(2 + i, 2 + j)) * 0.5;
        want(i, j) = m;
        want(2 + i, 2 + j) = m;
      }
    c.bound((sp.code - want).frobenius_norm(), 1e-10);
  }
  c.report("50 random Hamiltonians: code blocks trivial on the logical factor");
  CHECK(c.ok);
}

TEST_CASE("criterion 9: paper error decompositions") {
  Criterion c(9);
  errors::PaperCheck pc = errors::paper_check(1e-10);
  c.require(pc.ok);
  c.require(c.seconds() < 2.0);
  c.report("cross-error coefficients, ten bilinear terms, 4-qubit one- and "
           "two-term results");
  if (!pc.ok)
    for (const std::string& line : pc.lines) std::printf("              %s\n", line.c_str());
  CHECK(c.ok);
}

TEST_CASE("criterion 10: DFS guarantee under collective couplings") {
  Criterion c(10);
  const Leo leo = dfs3::canonical_leo();
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
    dd::BathModel bath = dd::make_bath(2, 5, {collective(3, ax)});
    dd::OpenSystemReport rep = dd::simulate_open_system(
        bath, Operator(8), dd::PulseSchedule{leo, 0.5, 1}, leo.partition);
    c.bound(1.0 - rep.min_fidelity_without_pulses, 1e-8);
  }
  c.report("collective-only couplings preserve code fidelity with no pulses");
  CHECK(c.ok);
}
