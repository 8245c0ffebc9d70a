#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equil/core/distribution.hpp"
#include "equil/core/probe.hpp"

namespace equil {

enum class SamplingScheme { uniform_grid, stratified_random };

std::string_view to_string(SamplingScheme scheme);
SamplingScheme parse_sampling_scheme(std::string_view name);

// Finite-horizon stand-in for the infinite time average: `samples` times in
// [0, horizon). The uniform grid uses t_k = k T / M; the stratified scheme
// draws one uniform time in each of the M equal sub-intervals.
struct TimeAverageConfig {
    double horizon = 1.0;
    std::size_t samples = 10000;
    SamplingScheme scheme = SamplingScheme::stratified_random;
    std::uint64_t seed = 0;

    // Throws DomainError unless horizon is finite and positive and samples >= 2.
    void validate() const;
};

std::vector<double> sample_times(const TimeAverageConfig& cfg);

// Mean of a scalar time series with the naive standard error s / sqrt(M).
// For correlated samples this is a heuristic, not a confidence bound.
struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;
};

Estimate estimate_mean(std::span<const double> values);

// Same mean with a batch-means standard error: the series is cut into
// `batch_count` consecutive blocks and the spread of the block means is used,
// which stays honest when neighbouring samples are correlated. Falls back to
// estimate_mean when there are fewer than two values per block.
Estimate estimate_mean_batched(std::span<const double> values, std::size_t batch_count);

// Distributions sampled along a trajectory, one row per sample time.
struct TrajectorySamples {
    std::vector<double> times;
    std::vector<OutcomeDistribution> distributions;
};

TrajectorySamples sample_trajectory(const TrajectoryProbe& probe, const TimeAverageConfig& cfg);

// Per-outcome empirical mean over the samples, renormalized to sum to one.
OutcomeDistribution time_average_distribution(const TrajectoryProbe& probe,
                                              const TimeAverageConfig& cfg);
OutcomeDistribution time_average_distribution(const TrajectorySamples& samples);

// Per-outcome standard errors of the time average.
std::vector<double> time_average_standard_errors(const TrajectorySamples& samples);

Estimate average_distinguishability(const TrajectoryProbe& probe,
                                    const OutcomeDistribution& omega,
                                    const TimeAverageConfig& cfg);
Estimate average_distinguishability(const TrajectorySamples& samples,
                                    const OutcomeDistribution& omega);

// Time average of the max-distinguishability over several measurements of the
// same trajectory. All probes are sampled at the same times.
Estimate average_multi_distinguishability(std::span<const TrajectoryProbe> probes,
                                          std::span<const OutcomeDistribution> omegas,
                                          const TimeAverageConfig& cfg);

}  // namespace equil
