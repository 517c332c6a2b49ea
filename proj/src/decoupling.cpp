#include "leolab/decoupling.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "leolab/linalg.hpp"

namespace leolab::dd {

namespace {

Operator matrix_power(Operator base, int n) {
  Operator acc = Operator::identity(base.dim());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Operator even_part(const Operator& h, const Operator& r) {
  return (h + r * h * r.adjoint()) * 0.5;
}

double fit_slope(const std::vector<SweepPoint>& pts) {
  // least squares on (log n, log leakage); degenerate data gives 0
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const SweepPoint& p : pts) {
    if (p.leakage_norm <= 0.0) continue;
    const double x = std::log(static_cast<double>(p.cycles));
    const double y = std::log(p.leakage_norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double denom = m * sxx - sx * sx;
  if (m < 2 || std::abs(denom) < 1e-300) return 0.0;
  return (m * sxy - sx * sy) / denom;
}

Operator random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) {
      cplx v(gauss(rng), i == j ? 0.0 : gauss(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  return m;
}

}  // namespace

Operator effective_hamiltonian(const Operator& h, const std::vector<Operator>& pulses,
                               double tol) {
  if (tol < 0.0) tol = default_tolerance();
  if (pulses.empty())
    throw std::invalid_argument("effective_hamiltonian: need at least one pulse");
  Operator acc(h.dim());
  for (const Operator& u : pulses) {
    if (u.dim() != h.dim())
      throw std::invalid_argument("effective_hamiltonian: pulse dimension mismatch");
    if (!u.is_unitary(tol))
      throw std::invalid_argument("effective_hamiltonian: pulse '" + u.label() +
                                  "' is not unitary");
    acc += u * h * u.adjoint();
  }
  return acc * (1.0 / static_cast<double>(pulses.size()));
}

KickResult parity_kick(const Operator& h, const PulseSchedule& schedule, double tol) {
  if (tol < 0.0) tol = default_tolerance();
  if (schedule.cycles < 1 || schedule.t < 0.0)
    throw std::invalid_argument("parity_kick: need cycles >= 1 and t >= 0");
  const Operator& r = schedule.leo.unitary;
  if (h.dim() != r.dim())
    throw std::invalid_argument("parity_kick: Hamiltonian/LEO dimension mismatch");

  const double tau = schedule.t / (2.0 * schedule.cycles);
  const Operator seg = expm_hermitian(h, tau, tol);
  const Operator cycle = seg * r.adjoint() * seg * r;
  KickResult out{matrix_power(cycle, schedule.cycles), 0.0, 0.0, 0.0};

  const BlockPartition& p = schedule.leo.partition;
  const BlockSplit split = leak::block_partition(leak::to_adapted(out.u_eff, p), p);
  out.leakage_norm = split.leakage_norm();

  const Operator limit = expm_hermitian(even_part(h, r), schedule.t, tol);
  out.limit_residual = (out.u_eff - limit).frobenius_norm();

  const BlockSplit ideal = leak::block_partition(leak::to_adapted(limit, p), p);
  const double code_diff = (split.code - ideal.code).frobenius_norm();
  out.fidelity = 1.0 - code_diff / (2.0 * std::sqrt(static_cast<double>(p.code_dim)));
  return out;
}

KickSweep parity_kick_sweep(const Operator& h, const Leo& leo, double t,
                            const std::vector<int>& n_list) {
  const auto start = std::chrono::steady_clock::now();
  KickSweep sweep;
  for (int n : n_list) {
    KickResult r = parity_kick(h, PulseSchedule{leo, t, n});
    sweep.points.push_back({n, r.leakage_norm, r.limit_residual, r.fidelity});
  }
  sweep.slope = fit_slope(sweep.points);
  sweep.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sweep;
}

Operator symmetrize_logical_group(const Operator& h, const Operator& lx,
                                  const Operator& ly, const Operator& lz,
                                  const BlockPartition& p, double tol) {
  if (tol < 0.0) tol = default_tolerance();
  constexpr double kPi = 3.14159265358979323846;
  std::vector<Operator> pulses{Operator::identity(p.total_dim)};
  for (const Operator* g : {&lx, &ly, &lz}) {
    // Pauli code block <=> g^2 restricted to the code is the identity block.
    const BlockSplit s = leak::block_partition(leak::to_adapted(*g * *g, p), p);
    Operator dev = s.code - Operator::identity(p.code_dim);
    if (dev.frobenius_norm() > tol || s.leakage_norm() > tol)
      throw std::invalid_argument(
          "symmetrize_logical_group: generator '" + g->label() +
          "' does not act as a Pauli matrix on the code block");
    pulses.push_back(expm_hermitian(*g, kPi / 2.0, tol));
  }
  return effective_hamiltonian(h, pulses, tol);
}

BathModel make_bath(int bath_dim, std::uint64_t seed,
                    std::vector<Operator> system_couplings) {
  if (bath_dim < 1) throw std::invalid_argument("make_bath: bath dim must be >= 1");
  std::mt19937_64 rng(seed);
  BathModel bath;
  bath.dim = bath_dim;
  bath.seed = seed;
  auto unit_spectral_radius = [](Operator m) {
    EighResult eig = eigh(m);
    double radius = 0.0;
    for (double w : eig.eigenvalues) radius = std::max(radius, std::abs(w));
    if (radius > 0.0) m *= cplx(1.0 / radius, 0.0);
    return m;
  };
  bath.h_b = unit_spectral_radius(random_hermitian(bath_dim, rng));
  for (Operator& s : system_couplings) {
    Operator b = unit_spectral_radius(random_hermitian(bath_dim, rng));
    bath.couplings.emplace_back(std::move(s), std::move(b));
  }
  return bath;
}

OpenSystemReport simulate_open_system(const BathModel& bath, const Operator& h_s,
                                      const PulseSchedule& schedule,
                                      const BlockPartition& p) {
  const int ns = p.total_dim, nb = bath.dim;
  if (h_s.dim() != ns)
    throw std::invalid_argument("simulate_open_system: system Hamiltonian dim mismatch");
  if (bath.h_b.dim() != nb)
    throw std::invalid_argument("simulate_open_system: bath Hamiltonian dim mismatch");
  if (schedule.leo.unitary.dim() != ns)
    throw std::invalid_argument("simulate_open_system: LEO must act on the system factor");

  const Operator is = Operator::identity(ns), ib = Operator::identity(nb);
  Operator h = kron(h_s, ib) + kron(is, bath.h_b);
  for (const auto& [s, b] : bath.couplings) {
    if (s.dim() != ns || b.dim() != nb)
      throw std::invalid_argument("simulate_open_system: coupling dimension mismatch");
    h += kron(s, b);
  }

  const Operator r_joint = kron(schedule.leo.unitary, ib);
  const int n = schedule.cycles;
  const double tau = schedule.t / (2.0 * n);
  const Operator seg = expm_hermitian(h, tau);
  const Operator u_eff = matrix_power(seg * r_joint.adjoint() * seg * r_joint, n);
  const Operator u_free = expm_hermitian(h, schedule.t);

  // projector onto C ⊗ bath, computational basis
  Operator pi_code(ns);
  for (int i = 0; i < p.code_dim; ++i) pi_code(i, i) = 1.0;
  pi_code = leak::from_adapted(pi_code, p);
  const Operator pi_joint = kron(pi_code, ib);

  OpenSystemReport rep;
  rep.cycles = n;
  rep.t = schedule.t;

  for (int i = 0; i < p.code_dim; ++i) {
    // adapted code state i, first bath basis state
    std::vector<cplx> psi0(static_cast<std::size_t>(ns) * nb);
    for (int c = 0; c < ns; ++c) psi0[static_cast<std::size_t>(c) * nb] =
        std::conj(p.basis_change(i, c));
    auto leaked = [&](const Operator& u) {
      std::vector<cplx> psi = u.apply(psi0);
      std::vector<cplx> proj = pi_joint.apply(psi);
      const double pop =
          kernels::active().dot_conj(psi.data(), proj.data(), psi.size()).real();
      const double norm = std::sqrt(kernels::active().norm_sq(psi.data(), psi.size()));
      return std::pair<double, double>(1.0 - pop, norm);
    };
    auto [with_pulses, norm1] = leaked(u_eff);
    auto [without_pulses, norm2] = leaked(u_free);
    rep.leaked_with_pulses.push_back(with_pulses);
    rep.leaked_without_pulses.push_back(without_pulses);
    rep.max_leaked_with_pulses = std::max(rep.max_leaked_with_pulses, with_pulses);
    rep.max_leaked_without_pulses =
        std::max(rep.max_leaked_without_pulses, without_pulses);
    rep.min_fidelity_with_pulses =
        std::min(rep.min_fidelity_with_pulses, 1.0 - with_pulses);
    rep.min_fidelity_without_pulses =
        std::min(rep.min_fidelity_without_pulses, 1.0 - without_pulses);
    rep.norm_error = std::max({rep.norm_error, std::abs(norm1 - 1.0),
                               std::abs(norm2 - 1.0)});
  }
  return rep;
}

}  // namespace leolab::dd
