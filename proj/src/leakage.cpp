#include "leolab/leakage.hpp"

#include <cmath>
#include <random>

#include "leolab/linalg.hpp"
#include "leolab/serialize.hpp"

namespace leolab::leak {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_partition(const Operator& op, const BlockPartition& p) {
  if (p.code_dim <= 0 || p.code_dim >= p.total_dim)
    throw std::invalid_argument("BlockPartition: need 0 < code_dim < total_dim");
  if (op.dim() != p.total_dim)
    throw std::invalid_argument("block_partition: operator dim " +
                                std::to_string(op.dim()) + " != partition dim " +
                                std::to_string(p.total_dim));
}

// Random Hermitian probes with prescribed block support, used for the
// grading certificate carried by each Leo.
std::vector<Operator> grading_probes(const BlockPartition& p, bool off_diagonal,
                                     int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Operator> probes;
  const int k = p.code_dim, n = p.total_dim;
  for (int t = 0; t < count; ++t) {
    Operator m(n);
    auto in_code = [k](int i) { return i < k; };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        const bool cross = in_code(i) != in_code(j);
        if (cross != off_diagonal) continue;
        cplx v(gauss(rng), i == j ? 0.0 : gauss(rng));
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    probes.push_back(from_adapted(m, p));
  }
  return probes;
}

void attach_certificate(Leo& leo) {
  double even = 0.0, odd = 0.0;
  for (const Operator& e : grading_probes(leo.partition, false, 8, 0x1e0u))
    even = std::max(even, commutator(leo.unitary, e).frobenius_norm());
  for (const Operator& l : grading_probes(leo.partition, true, 8, 0x0ddu))
    odd = std::max(odd, anticommutator(leo.unitary, l).frobenius_norm());
  leo.even_residual = even;
  leo.odd_residual = odd;
}

// e^{i phi} (-I_code ⊕ I_perp) in the computational basis.
Operator reference_leo(const BlockPartition& p, cplx phase) {
  Operator d = Operator::identity(p.total_dim);
  for (int i = 0; i < p.code_dim; ++i) d(i, i) = -1.0;
  return from_adapted(d * phase, p);
}

}  // namespace

BlockSplit block_partition(const Operator& op, const BlockPartition& p) {
  check_partition(op, p);
  const int k = p.code_dim, m = p.perp_dim();
  BlockSplit s{Operator(k), Operator(m), Block{k, m, {}}, Block{m, k, {}}};
  s.upper.a.resize(static_cast<std::size_t>(k) * m);
  s.lower.a.resize(static_cast<std::size_t>(m) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s.code(i, j) = op(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.perp(i, j) = op(k + i, k + j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) s.upper.at(i, j) = op(i, k + j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) s.lower.at(i, j) = op(k + i, j);
  return s;
}

Operator assemble(const BlockSplit& s, const BlockPartition& p) {
  const int k = p.code_dim, m = p.perp_dim();
  Operator op(p.total_dim);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) op(i, j) = s.code(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) op(k + i, k + j) = s.perp(i, j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) op(i, k + j) = s.upper.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) op(k + i, j) = s.lower.at(i, j);
  return op;
}

Operator to_adapted(const Operator& op, const BlockPartition& p) {
  return p.basis_change * op * p.basis_change.adjoint();
}

Operator from_adapted(const Operator& op, const BlockPartition& p) {
  return p.basis_change.adjoint() * op * p.basis_change;
}

GradedClass grade(const Operator& op, const Leo& leo, double tol) {
  if (tol < 0.0) tol = default_tolerance();
  const double even = commutator(leo.unitary, op).frobenius_norm();
  const double odd = anticommutator(leo.unitary, op).frobenius_norm();
  if (even <= tol) return GradedClass::Even;
  if (odd <= tol) return GradedClass::Odd;
  return GradedClass::Mixed;
}

Result<Leo> make_canonical_leo(const Operator& sigma_L, const BlockPartition& p,
                               double tol) {
  if (tol < 0.0) tol = default_tolerance();
  check_partition(sigma_L, p);

  if (!sigma_L.is_hermitian(tol)) {
    double r = sigma_L.max_abs_diff(sigma_L.adjoint());
    return {std::nullopt,
            Rejection{"sigma_L Hermitian",
                      "max |sigma_L - sigma_L^dag| = " + format_float(r), r, {}}};
  }

  // Code projector in the computational basis. The complement check runs
  // first: a gate with nonzero complement action is the interesting failure
  // (the 4-qubit exchange gates), and the diagnostic should say so.
  Operator pi_c(p.total_dim);
  for (int i = 0; i < p.code_dim; ++i) pi_c(i, i) = 1.0;
  pi_c = from_adapted(pi_c, p);

  const Operator pi_perp = Operator::identity(p.total_dim) - pi_c;
  const double perp_res = (sigma_L * pi_perp).frobenius_norm();
  if (perp_res > tol) {
    return {std::nullopt,
            Rejection{"sigma_L = 0 on the orthogonal complement",
                      "||sigma_L Pi_perp||_F = " + format_float(perp_res),
                      perp_res, {}}};
  }

  const Operator sq = sigma_L * sigma_L;
  const double proj_res = (sq - pi_c).frobenius_norm();
  if (proj_res > tol) {
    return {std::nullopt,
            Rejection{"sigma_L^2 = Pi_C",
                      "||sigma_L^2 - Pi_C||_F = " + format_float(proj_res),
                      proj_res, {}}};
  }

  Leo leo{expm_hermitian(sigma_L, kPi, tol), cplx(1.0, 0.0), p, 0.0, 0.0};
  const double form_res = (leo.unitary - reference_leo(p, leo.phase)).frobenius_norm();
  if (form_res > std::max(tol, 1e-8 * p.total_dim)) {
    return {std::nullopt,
            Rejection{"exp(-i pi sigma_L) of LEO form",
                      "||R - (-I ⊕ I)||_F = " + format_float(form_res), form_res, {}}};
  }
  attach_certificate(leo);
  return {std::move(leo), std::nullopt};
}

Result<Leo> make_generalized_leo(const Operator& h, const BlockPartition& p,
                                 double tol, double integer_tol) {
  if (tol < 0.0) tol = default_tolerance();
  check_partition(h, p);

  if (!h.is_hermitian(tol)) {
    double r = h.max_abs_diff(h.adjoint());
    return {std::nullopt,
            Rejection{"h Hermitian",
                      "max |h - h^dag| = " + format_float(r), r, {}}};
  }

  BlockSplit s = block_partition(to_adapted(h, p), p);
  const double leak_res = s.leakage_norm();
  if (leak_res > tol) {
    return {std::nullopt,
            Rejection{"h block-diagonal w.r.t. the partition",
                      "leakage-block norm = " + format_float(leak_res), leak_res, {}}};
  }

  // Integer spectra of uniform, opposite parities on the two blocks.
  auto block_parity = [&](const Operator& blk, const char* which,
                          std::optional<Rejection>& rej) -> int {
    EighResult eig = eigh(blk, tol);
    int parity = -1;
    for (double w : eig.eigenvalues) {
      const double nearest = std::round(w);
      if (std::abs(w - nearest) > integer_tol) {
        rej = Rejection{"integer spectrum",
                        std::string(which) + " block eigenvalue " + format_float(w) +
                            " is not an integer",
                        std::abs(w - nearest), w};
        return -1;
      }
      const int par = static_cast<int>(std::llround(nearest)) & 1;
      if (parity == -1) {
        parity = par;
      } else if (parity != par) {
        rej = Rejection{"uniform parity within a block",
                        std::string(which) + " block mixes parities (eigenvalue " +
                            format_float(w) + ")",
                        0.0, w};
        return -1;
      }
    }
    return parity;
  };

  std::optional<Rejection> rej;
  const int code_parity = block_parity(s.code, "code", rej);
  if (rej) return {std::nullopt, rej};
  const int perp_parity = block_parity(s.perp, "perp", rej);
  if (rej) return {std::nullopt, rej};
  if (code_parity == perp_parity) {
    return {std::nullopt,
            Rejection{"opposite parities on code and complement",
                      std::string("both blocks have ") +
                          (code_parity ? "odd" : "even") + " integer spectra",
                      0.0, {}}};
  }

  // e^{-i pi (odd)} = -1, e^{-i pi (even)} = +1. Odd code parity gives the
  // reference form directly; even code parity gives it times e^{i pi}.
  const cplx phase = code_parity == 1 ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
  Leo leo{expm_hermitian(h, kPi, tol), phase, p, 0.0, 0.0};

  const double form_res =
      (leo.unitary - reference_leo(p, phase)).frobenius_norm();
  if (form_res > std::max(tol, integer_tol * p.total_dim)) {
    return {std::nullopt,
            Rejection{"exp(-i pi h) of LEO form",
                      "||R - e^{i phi}(-I ⊕ I)||_F = " + format_float(form_res),
                      form_res, {}}};
  }

  attach_certificate(leo);
  return {std::move(leo), std::nullopt};
}

bool is_in_commutant(const Operator& op, const std::vector<Operator>& generators,
                     double tol) {
  if (tol < 0.0) tol = default_tolerance();
  for (const Operator& g : generators)
    if (commutator(op, g).frobenius_norm() > tol) return false;
  return true;
}

}  // namespace leolab::leak
