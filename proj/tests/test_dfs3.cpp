#include <doctest.h>

#include <map>

#include "leolab/dfs3.hpp"
#include "leolab/linalg.hpp"
#include "leolab/pauli.hpp"
#include "test_helpers.hpp"

using namespace leolab;
using test::random_hermitian;
using test::random_operator;

namespace {

const double kS2 = std::sqrt(2.0);

// classify() coefficient of the element called `name`
cplx coef_of(const Classification& cls, const DfsBasis& b, const std::string& name) {
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    if (b.elements[i].name == name) return cls.coefficients[i];
  FAIL("no element named ", name);
  return {};
}

}  // namespace

TEST_CASE("U_dfs rows match the printed matrix") {
  Operator u = dfs3::udfs();
  CHECK(u.is_unitary(1e-14));

  // first row: +1/sqrt2 at |010>, -1/sqrt2 at |100>
  CHECK(std::abs(u(0, 2) - cplx(1 / kS2, 0)) < 1e-15);
  CHECK(std::abs(u(0, 4) + cplx(1 / kS2, 0)) < 1e-15);
  for (int j : {0, 1, 3, 5, 6, 7}) CHECK(std::abs(u(0, j)) == 0.0);

  // |000> is the fifth adapted state (top of the J=3/2 ladder)
  std::vector<cplx> e000(8);
  e000[0] = 1.0;
  auto adapted = u.apply(e000);
  CHECK(std::abs(adapted[4] - cplx(1.0, 0.0)) < 1e-15);
  for (int i : {0, 1, 2, 3, 5, 6, 7}) CHECK(std::abs(adapted[i]) == 0.0);
}

TEST_CASE("logical operators transform to the displayed block matrices") {
  const BlockPartition p = dfs3::partition();
  auto ops = dfs3::logical_ops();

  Operator want_x(8), want_z(8), want_y(8);
  for (int mu = 0; mu < 2; ++mu) {
    want_x(mu, 2 + mu) = 1.0;
    want_x(2 + mu, mu) = 1.0;
    want_y(mu, 2 + mu) = cplx(0.0, -1.0);
    want_y(2 + mu, mu) = cplx(0.0, 1.0);
    want_z(mu, mu) = 1.0;
    want_z(2 + mu, 2 + mu) = -1.0;
  }
  CHECK(leak::to_adapted(ops.x, p).max_abs_diff(want_x) < 1e-12);
  CHECK(leak::to_adapted(ops.z, p).max_abs_diff(want_z) < 1e-12);
  CHECK(leak::to_adapted(ops.y, p).max_abs_diff(want_y) < 1e-12);

  // X-bar swaps the logical sectors
  std::vector<cplx> zero_l(8);
  zero_l[0] = 1.0;  // adapted |lambda=0, mu=+>
  auto moved = leak::to_adapted(ops.x, p).apply(zero_l);
  CHECK(std::abs(moved[2] - cplx(1.0, 0.0)) < 1e-12);

  // spectrum {+1 x2, -1 x2, 0 x4}
  EighResult eig = eigh(ops.x);
  int plus = 0, minus = 0, zero = 0;
  for (double w : eig.eigenvalues) {
    if (std::abs(w - 1) < 1e-10) ++plus;
    else if (std::abs(w + 1) < 1e-10) ++minus;
    else if (std::abs(w) < 1e-10) ++zero;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
  CHECK(zero == 4);
}

TEST_CASE("canonical LEO is the code parity operator") {
  const Leo leo = dfs3::canonical_leo();
  Operator want = Operator::identity(8);
  for (int i = 0; i < 4; ++i) want(i, i) = -1.0;
  CHECK(leak::to_adapted(leo.unitary, leo.partition).max_abs_diff(want) < 1e-12);
  CHECK((leo.unitary * leo.unitary - Operator::identity(8)).frobenius_norm() < 1e-12);

  // anticommutes with all 32 leakage elements, commutes with the other 32
  int leakage = 0, even = 0;
  for (const BasisElement& e : dfs3::basis().elements) {
    if (e.cls == ErrorClass::Leakage) {
      CHECK(anticommutator(leo.unitary, e.op).frobenius_norm() < 1e-10);
      ++leakage;
    } else {
      CHECK(commutator(leo.unitary, e.op).frobenius_norm() < 1e-10);
      ++even;
    }
  }
  CHECK(leakage == 32);
  CHECK(even == 32);
}

TEST_CASE("the 64-element basis is complete, classified and orthogonal") {
  const DfsBasis& b = dfs3::basis();
  REQUIRE(b.elements.size() == 64);

  std::map<ErrorClass, int> counts;
  for (const BasisElement& e : b.elements) ++counts[e.cls];
  CHECK(counts[ErrorClass::Identity] == 1);
  CHECK(counts[ErrorClass::Logical] == 3);
  CHECK(counts[ErrorClass::OrthoLogical] == 3);
  CHECK(counts[ErrorClass::Collective] == 5);  // S_X, S_Y, S_Z, ZIZ, ZII
  CHECK(counts[ErrorClass::Stabilizer] == 6);
  CHECK(counts[ErrorClass::OrthoAnnihilator] == 5);
  CHECK(counts[ErrorClass::LogicalCollectiveProduct] == 9);
  CHECK(counts[ErrorClass::Leakage] == 32);

  // report any violating pair by name instead of re-orthogonalizing
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = i + 1; j < 64; ++j) {
      INFO("pair ", b.elements[i].name, " vs ", b.elements[j].name);
      CHECK(std::abs(hs_inner(b.elements[i].op, b.elements[j].op)) < 1e-10);
    }

  // spans End(C^8): random operators resynthesize
  for (int s = 0; s < 20; ++s) {
    Classification cls = classify(random_operator(8, 5000 + s), b);
    CHECK(cls.residual < 1e-10);
  }
}

TEST_CASE("S_X1 carries the printed coefficients") {
  const DfsBasis& b = dfs3::basis();
  const BasisElement* sx1 = b.find("S_X1");
  REQUIRE(sx1 != nullptr);

  const char* prims[4] = {"pIX", "qIX", "qXX", "qYY"};
  const double want[4] = {1 / std::sqrt(30.0), 1 / std::sqrt(10.0),
                          1 / std::sqrt(30.0), -std::sqrt(5.0 / 6.0)};
  for (int k = 0; k < 4; ++k) {
    Operator prim = tilde_product(prims[k]);
    cplx c = hs_inner(prim, sx1->adapted) /
             (prim.frobenius_norm() * prim.frobenius_norm());
    CHECK(std::abs(c - cplx(want[k], 0.0)) < 1e-12);
  }

  const BasisElement* sx = b.find("S_X");
  REQUIRE(sx != nullptr);
  CHECK(std::abs(hs_inner(sx1->op, sx->op)) < 1e-12);
  // both the completion elements and S_X/sqrt6 have HS norm 2
  CHECK(sx1->hs_norm == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sx->hs_norm == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("collective operators match their tilde expansions") {
  const BlockPartition p = dfs3::partition();
  const double s3 = std::sqrt(3.0);

  Operator sx = leak::to_adapted(collective(3, Axis::X), p);
  Operator sx_claim = tilde_product("pIX") + tilde_product("qIX") * s3 +
                      tilde_product("qXX") + tilde_product("qYY");
  CHECK((sx - sx_claim).frobenius_norm() < 1e-10);

  // The XY primitive enters S_Y with a minus sign; the displayed plus sign
  // leaves a residual of exactly 4 (= 2 * ||qXY||).
  Operator sy = leak::to_adapted(collective(3, Axis::Y), p);
  Operator sy_claim = tilde_product("pIY") + tilde_product("qIY") * s3 -
                      tilde_product("qXY") + tilde_product("qYX");
  CHECK((sy - sy_claim).frobenius_norm() < 1e-10);
  Operator sy_printed = tilde_product("pIY") + tilde_product("qIY") * s3 +
                        tilde_product("qXY") + tilde_product("qYX");
  CHECK((sy - sy_printed).frobenius_norm() == doctest::Approx(4.0).epsilon(1e-10));

  Operator sz = leak::to_adapted(collective(3, Axis::Z), p);
  Operator sz_claim = tilde_product("IIZ") + tilde_product("-ZI");
  CHECK((sz - sz_claim).frobenius_norm() < 1e-10);
}

TEST_CASE("sigma_z_perp stays orthogonal to S_Z and sigma_z_bar") {
  const DfsBasis& b = dfs3::basis();
  const BasisElement* zp = b.find("sigma_z_perp");
  REQUIRE(zp != nullptr);
  CHECK(std::abs(hs_inner(zp->op, b.find("S_Z")->op)) < 1e-12);
  CHECK(std::abs(hs_inner(zp->op, b.find("sigma_z_bar")->op)) < 1e-12);
}

TEST_CASE("eight diagonal elements span the Cartan subalgebra") {
  const DfsBasis& b = dfs3::basis();
  const char* names[8] = {"I",   "sigma_z_bar", "sigma_z_perp", "S_Z",
                          "ZIZ", "ZII",         "(I-Z)ZZ",      "(I+Z)ZZ"};
  int found = 0;
  for (const char* name : names) {
    const BasisElement* e = b.find(name);
    REQUIRE(e != nullptr);
    // diagonal in the adapted basis
    double off = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (i != j) off = std::max(off, std::abs(e->adapted(i, j)));
    CHECK(off < 1e-12);
    ++found;
  }
  CHECK(found == 8);  // eight mutually orthogonal diagonal vectors span C^8
}

TEST_CASE("classify recognizes logical, collective and random input") {
  const DfsBasis& b = dfs3::basis();
  auto ops = dfs3::logical_ops();

  Classification xc = classify(ops.x, b);
  CHECK(xc.summary == std::set<ErrorClass>{ErrorClass::Logical});
  CHECK(std::abs(coef_of(xc, b, "sigma_x_bar") - cplx(1.0, 0.0)) < 1e-12);
  CHECK(xc.residual < 1e-12);

  Classification sc = classify(collective(3, Axis::X), b);
  CHECK(sc.summary.contains(ErrorClass::Collective));
  CHECK_FALSE(sc.summary.contains(ErrorClass::Logical));
  CHECK_FALSE(sc.summary.contains(ErrorClass::Leakage));
  for (ErrorClass c : sc.summary)
    CHECK((c == ErrorClass::Collective || c == ErrorClass::Stabilizer));

  Classification rc = classify(random_hermitian(8, 99), b);
  CHECK(rc.residual < 1e-10);

  CHECK_THROWS_AS(classify(Operator::identity(4), b), std::invalid_argument);
}

TEST_CASE("stabilizer verification by code action") {
  const DfsBasis& b = dfs3::basis();
  for (const char* name : {"S_X1", "S_X2", "S_X3", "S_Y1", "S_Y2", "S_Y3"})
    CHECK(dfs3::verify_stabilizer(b.find(name)->op));

  CHECK_FALSE(dfs3::verify_stabilizer(dfs3::logical_ops().x));
  CHECK_FALSE(dfs3::verify_stabilizer(b.find("XIX")->op));  // leakage
  CHECK(dfs3::verify_stabilizer(collective(3, Axis::Z)));   // gauge action only
}
