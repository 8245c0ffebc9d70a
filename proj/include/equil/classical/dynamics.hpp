#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "equil/classical/maps.hpp"
#include "equil/classical/partition.hpp"
#include "equil/classical/phase_space.hpp"
#include "equil/core/distribution.hpp"
#include "equil/core/probe.hpp"
#include "equil/core/time_average.hpp"

namespace equil::classical {

// Weighted point cloud standing in for a smooth phase-space density. The
// chaotic flags mark which points are taken to belong to the chaotic subset.
struct ClassicalEnsemble {
    std::vector<PhasePoint> points;
    std::vector<double> weights;
    std::vector<bool> chaotic_flags;

    // Throws DataError on length mismatch or unnormalized weights.
    void validate() const;

    static ClassicalEnsemble equal_weights(std::vector<PhasePoint> points,
                                           std::vector<bool> chaotic_flags);

    // Effective number of points, 1 / sum w_i^2.
    double effective_size() const;
    // Total weight on points not flagged chaotic.
    double non_chaotic_weight() const;
};

// Applies the map |steps| times, forward for steps >= 0 and backward otherwise.
PhasePoint evolve(const PhasePoint& x, const InvertibleMap& map, long long steps);

// x_0, ..., x_{steps-1}.
std::vector<PhasePoint> orbit(const PhasePoint& x, const InvertibleMap& map, std::size_t steps);

// Indicator distribution of the cell visited at step floor(t).
TrajectoryProbe classical_probe(const PhasePoint& x, const InvertibleMap& map,
                                const Partition& partition);

// Weight-averaged indicator distribution of the ensemble at step floor(t).
TrajectoryProbe ensemble_probe(const ClassicalEnsemble& e, const InvertibleMap& map,
                               const Partition& partition);

// Exact infinite-time average distinguishability of any pure classical state
// whose occupation vector is omega: 1 - sum_j omega_j^2.
double pure_average_distinguishability_closed_form(const OutcomeDistribution& omega);

// Necessary condition for a pure classical state to epsilon-equilibrate:
// max_j omega_j >= 1 - epsilon.
bool check_necessity(const OutcomeDistribution& omega, double epsilon);

// Bound sqrt(N delta / 2) on the average distinguishability of a mixture
// whose non-chaotic weight is at most delta (requires delta <= 1/2).
double mixed_equilibration_bound(std::size_t outcome_count, double delta);

// Time-averaged correlation between the cell indicators of two orbits,
// <p_j(x_t) p_j(y_t)> - <p_j(x_t)> <p_j(y_t)>, with naive standard errors.
struct CorrelationDefect {
    std::vector<double> per_outcome;
    std::vector<double> per_outcome_standard_error;
    // Sum over outcomes, the quantity entering the mixed-state bound.
    double total = 0.0;
    double total_standard_error = 0.0;
};

CorrelationDefect correlation_defect(const PhasePoint& x, const PhasePoint& y,
                                     const InvertibleMap& map, const Partition& partition,
                                     const TimeAverageConfig& cfg);

// Average distinguishability of an ensemble from its time average.
//
// The point cloud is a Monte-Carlo quadrature of a smooth density, so the
// reported standard error combines the time-sampling error with the
// quadrature error of the per-time distributions,
// <(1/2) sum_j sqrt(p_j(t) (1 - p_j(t)) / n_eff)>.
struct EnsembleEstimate {
    OutcomeDistribution omega = OutcomeDistribution::uniform(1);
    Estimate distinguishability;
    double time_standard_error = 0.0;
    double quadrature_standard_error = 0.0;
};

EnsembleEstimate estimate_ensemble(const ClassicalEnsemble& e, const InvertibleMap& map,
                                   const Partition& partition, const TimeAverageConfig& cfg);

// Fraction of randomly drawn pairs of distinct chaotic-flagged points whose
// summed correlation defect lies within `z` standard errors of zero.
struct PairAudit {
    std::size_t pairs = 0;
    std::size_t passed = 0;
    double pass_fraction() const { return pairs == 0 ? 1.0 : double(passed) / double(pairs); }
};

PairAudit audit_chaotic_pairs(const ClassicalEnsemble& e, const InvertibleMap& map,
                              const Partition& partition, const TimeAverageConfig& cfg,
                              std::size_t pair_count, std::uint64_t seed, double z = 3.0);

// Cat-map ensemble of `size` random points of which round(delta * size) are
// replaced by points of the 1/4 lattice (periodic orbits of period <= 6).
// Uses exact dyadic arithmetic so the periodic points stay periodic.
ClassicalEnsemble contaminated_cat_ensemble(std::size_t size, double delta, std::mt19937_64& rng);

// CSV orbit dump with columns step,x0[,x1...],cell.
void write_orbit_csv(std::ostream& os, const PhasePoint& x, const InvertibleMap& map,
                     const Partition& partition, std::size_t steps);

}  // namespace equil::classical
