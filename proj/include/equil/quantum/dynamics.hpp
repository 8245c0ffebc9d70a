#pragma once

#include <cstdint>

#include "equil/core/distribution.hpp"
#include "equil/core/probe.hpp"
#include "equil/core/time_average.hpp"
#include "equil/quantum/spectrum.hpp"
#include "equil/quantum/state.hpp"

namespace equil::quantum {

// rho_t = exp(-iHt) rho exp(iHt).
DensityMatrix evolve_density(const DensityMatrix& rho, const HamiltonianSpectrum& h, double t);

// Infinite-time average of rho_t: sum_n Pi_n rho Pi_n over eigenspaces.
DensityMatrix dephase(const DensityMatrix& rho, const HamiltonianSpectrum& h);

// 1 / sum_n tr(Pi_n rho)^2.
double effective_dimension(const DensityMatrix& rho, const HamiltonianSpectrum& h);

// (tr(M_j rho))_j.
OutcomeDistribution outcome_distribution(const DensityMatrix& rho, const POVM& povm);

// Distribution of the dephased state.
OutcomeDistribution equilibrium_distribution(const DensityMatrix& rho,
                                             const HamiltonianSpectrum& h, const POVM& povm);

// Upper bound (1/2) sqrt(D_G (N - 1) / d_eff) on the average distinguishability
// of an evolving state from its time average.
double quantum_bound(std::size_t outcome_count, std::size_t gap_degeneracy, double d_eff);

// The same bound without the identity-subtraction step, (1/2) sqrt(D_G N / d_eff).
double quantum_bound_without_identity_shift(std::size_t outcome_count,
                                            std::size_t gap_degeneracy, double d_eff);

// Largest N with N <= 4 d_eff eps^2 / D_G + 1, i.e. the most outcomes for
// which the bound above certifies eps-equilibration.
std::size_t max_outcomes_for_equilibration(double epsilon, double d_eff,
                                           std::size_t gap_degeneracy);

// p_j(t) = tr(M_j rho_t), evaluated in the energy basis.
TrajectoryProbe quantum_probe(const DensityMatrix& rho, const HamiltonianSpectrum& h,
                              const POVM& povm);

// Horizon 10^3 * 2 pi / (smallest nonzero gap) with 10^4 stratified samples.
TimeAverageConfig default_time_average_config(const HamiltonianSpectrum& h, std::uint64_t seed,
                                              std::size_t samples = 10000);

}  // namespace equil::quantum
