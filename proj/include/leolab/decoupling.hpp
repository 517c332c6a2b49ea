#pragma once

// Bang-bang decoupling: effective-Hamiltonian averaging, the two-pulse
// parity-kick sequence built from an LEO, logical-group symmetrization, and
// joint system-bath simulation with interleaved LEO pulses.
//
// Time convention: one parity-kick cycle is exp(-iH tau) R^dag exp(-iH tau) R
// with tau = t/(2n), so the total free-evolution time over n cycles is t and
// the n -> infinity limit is exp(-i H_even t) with H_even = (H + R H R^dag)/2.

#include <cstdint>
#include <utility>
#include <vector>

#include "leolab/leakage.hpp"
#include "leolab/operator.hpp"

namespace leolab::dd {

struct PulseSchedule {
  Leo leo;
  double t = 0.0;  // total free-evolution time, hbar = 1
  int cycles = 1;
};

// (1/N) sum_i U_i h U_i^dag. Throws if a pulse is not unitary.
Operator effective_hamiltonian(const Operator& h, const std::vector<Operator>& pulses,
                               double tol = -1.0);

struct KickResult {
  Operator u_eff;
  double leakage_norm;    // Frobenius norm of the code<->perp blocks of U_eff
  double limit_residual;  // ||U_eff - exp(-i H_even t)||_F
  // 1 - ||Pi_C (U_eff - U_limit) Pi_C||_F / (2 sqrt(code_dim)), clamped to
  // [0, 1] by construction since each projected block has norm <= sqrt(dim)
  double fidelity;
};

KickResult parity_kick(const Operator& h, const PulseSchedule& schedule,
                       double tol = -1.0);

struct SweepPoint {
  int cycles = 0;
  double leakage_norm = 0.0;
  double limit_residual = 0.0;
  double fidelity = 0.0;
};

struct KickSweep {
  std::vector<SweepPoint> points;
  double slope = 0.0;  // log-log fit of leakage_norm against cycles
  double wall_time_seconds = 0.0;
};

KickSweep parity_kick_sweep(const Operator& h, const Leo& leo, double t,
                            const std::vector<int>& n_list);

// Average h over the encoded Pauli group realized as exp(-i pi/2 g) for the
// canonical logical generators. The code block of the result acts as the
// identity on the logical factor. Throws if the generators do not act as
// Pauli matrices on the code block.
Operator symmetrize_logical_group(const Operator& h, const Operator& lx,
                                  const Operator& ly, const Operator& lz,
                                  const BlockPartition& p, double tol = -1.0);

struct BathModel {
  int dim = 2;
  std::vector<std::pair<Operator, Operator>> couplings;  // (S_gamma, B_gamma)
  Operator h_b;
  std::uint64_t seed = 0;
};

// Hermitian bath operators drawn from a seeded Gaussian ensemble and
// normalized to unit spectral radius, one per system coupling operator.
BathModel make_bath(int bath_dim, std::uint64_t seed,
                    std::vector<Operator> system_couplings);

struct OpenSystemReport {
  int cycles = 0;
  double t = 0.0;
  // per initial code-basis state; code fidelity = population left in C ⊗ bath
  std::vector<double> leaked_with_pulses;
  std::vector<double> leaked_without_pulses;
  double max_leaked_with_pulses = 0.0;
  double max_leaked_without_pulses = 0.0;
  double min_fidelity_with_pulses = 1.0;
  double min_fidelity_without_pulses = 1.0;
  double norm_error = 0.0;  // worst |  ||U psi|| - 1  |
};

// Evolves the joint system ⊗ bath unitary with n parity-kick cycles (the LEO
// acts on the system factor only) and reports the population leaked out of
// the code, with and without pulses, for each initial adapted code state
// paired with the first bath basis state.
OpenSystemReport simulate_open_system(const BathModel& bath, const Operator& h_s,
                                      const PulseSchedule& schedule,
                                      const BlockPartition& p);

}  // namespace leolab::dd
