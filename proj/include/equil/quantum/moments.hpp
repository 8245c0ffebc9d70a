#pragma once

#include <cstddef>

#include "equil/quantum/spectrum.hpp"
#include "equil/quantum/state.hpp"

namespace equil::quantum {

// Energy eigenbasis in which a pure state has support on a single vector
// inside every eigenspace. Columns are grouped as in h.eigenspaces(); the
// first column of each eigenspace carries the state's component there.
CMatrix single_support_energy_basis(const DensityMatrix& rho_pure, const HamiltonianSpectrum& h);

// Exact infinite-time average of |tr(P (rho_t - omega))|^2 for a pure state,
//   sum_{n != j} sum_{k != l} v_nj conj(v_kl) [G_nj == G_kl],
// with v_nj = rho_nj P_jn in the single-support energy basis and gaps compared
// at `gap_tolerance`. Throws DomainError for mixed states.
double second_moment_exact(const DensityMatrix& rho_pure, const CMatrix& p,
                           const HamiltonianSpectrum& h, double gap_tolerance);
double second_moment_exact(const DensityMatrix& rho_pure, const CMatrix& p,
                           const HamiltonianSpectrum& h);

// Operator norm of the gap-coincidence matrix M_ab = [G_a == G_b] over gaps of
// distinct eigenspaces. M is block diagonal with all-ones blocks, so this is
// the largest gap-class size.
std::size_t gap_matrix_norm(const HamiltonianSpectrum& h, double gap_tolerance);

// Final inequality of the identity-shift step for an N-outcome element P:
// ||M|| (tr(P omega^2) (1 - 2/N) + tr(omega^2) / N^2).
double shifted_second_moment_bound(const CMatrix& p, const DensityMatrix& omega,
                                   std::size_t outcome_count, std::size_t gap_norm);

// Purification on system (x) ancilla with an ancilla of the system's
// dimension. Index order is system-major: |s>|a> -> s * d + a.
struct Purification {
    DensityMatrix state;
    std::size_t system_dimension = 0;
    std::size_t ancilla_dimension = 0;
};

Purification purify(const DensityMatrix& rho);

// H (x) 1 on system (x) ancilla: the ancilla evolves trivially.
HamiltonianSpectrum extend_with_null_ancilla(const HamiltonianSpectrum& h,
                                             std::size_t ancilla_dimension);

// M_j (x) 1 for every element.
POVM extend_povm(const POVM& povm, std::size_t ancilla_dimension);

}  // namespace equil::quantum
