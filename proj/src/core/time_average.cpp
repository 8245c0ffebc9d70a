#include "equil/core/time_average.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "equil/core/summation.hpp"
#include "equil/errors.hpp"

namespace equil {

std::string_view to_string(SamplingScheme scheme) {
    switch (scheme) {
    case SamplingScheme::uniform_grid:
        return "uniform-grid";
    case SamplingScheme::stratified_random:
        return "stratified-random";
    }
    return "?";
}

SamplingScheme parse_sampling_scheme(std::string_view name) {
    if (name == "uniform-grid")
        return SamplingScheme::uniform_grid;
    if (name == "stratified-random")
        return SamplingScheme::stratified_random;
    throw DomainError("unknown sampling scheme '" + std::string(name) + "'");
}

void TimeAverageConfig::validate() const {
    if (!(std::isfinite(horizon) && horizon > 0.0))
        throw DomainError("time average horizon must be finite and positive");
    if (samples < 2)
        throw DomainError("time average needs at least two samples");
}

std::vector<double> sample_times(const TimeAverageConfig& cfg) {
    cfg.validate();
    const double width = cfg.horizon / static_cast<double>(cfg.samples);
    std::vector<double> times(cfg.samples);
    if (cfg.scheme == SamplingScheme::uniform_grid) {
        for (std::size_t k = 0; k < cfg.samples; ++k)
            times[k] = static_cast<double>(k) * width;
        return times;
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t k = 0; k < cfg.samples; ++k)
        times[k] = (static_cast<double>(k) + unit(rng)) * width;
    return times;
}

Estimate estimate_mean(std::span<const double> values) {
    if (values.empty())
        throw DomainError("estimate_mean: no values");
    CompensatedSum sum;
    for (double v : values)
        sum.add(v);
    const double n = static_cast<double>(values.size());
    const double mean = sum.value() / n;
    if (values.size() < 2)
        return {mean, 0.0};
    CompensatedSum squares;
    for (double v : values)
        squares.add((v - mean) * (v - mean));
    const double variance = squares.value() / (n - 1.0);
    return {mean, std::sqrt(variance / n)};
}

Estimate estimate_mean_batched(std::span<const double> values, std::size_t batch_count) {
    if (batch_count < 2 || values.size() < 2 * batch_count)
        return estimate_mean(values);
    const std::size_t size = values.size() / batch_count;
    std::vector<double> means(batch_count);
    for (std::size_t b = 0; b < batch_count; ++b)
        means[b] = estimate_mean(values.subspan(b * size, size)).mean;
    // The mean itself uses every value, including the remainder.
    return {estimate_mean(values).mean, estimate_mean(means).standard_error};
}

TrajectorySamples sample_trajectory(const TrajectoryProbe& probe, const TimeAverageConfig& cfg) {
    TrajectorySamples out;
    out.times = sample_times(cfg);
    out.distributions = probe.sample_at(out.times);
    return out;
}

OutcomeDistribution time_average_distribution(const TrajectorySamples& samples) {
    if (samples.distributions.empty())
        throw DomainError("time average of an empty sample set");
    const std::size_t n = samples.distributions.front().size();
    std::vector<CompensatedSum> sums(n);
    for (const auto& p : samples.distributions) {
        if (p.size() != n)
            throw DataError("inconsistent outcome counts along trajectory");
        for (std::size_t j = 0; j < n; ++j)
            sums[j].add(p[j]);
    }
    std::vector<double> mean(n);
    for (std::size_t j = 0; j < n; ++j)
        mean[j] = sums[j].value();
    return OutcomeDistribution::normalized(std::move(mean));
}

OutcomeDistribution time_average_distribution(const TrajectoryProbe& probe,
                                              const TimeAverageConfig& cfg) {
    return time_average_distribution(sample_trajectory(probe, cfg));
}

std::vector<double> time_average_standard_errors(const TrajectorySamples& samples) {
    if (samples.distributions.empty())
        throw DomainError("time average of an empty sample set");
    const std::size_t n = samples.distributions.front().size();
    std::vector<double> out(n);
    std::vector<double> column(samples.distributions.size());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < column.size(); ++k)
            column[k] = samples.distributions[k][j];
        out[j] = estimate_mean(column).standard_error;
    }
    return out;
}

Estimate average_distinguishability(const TrajectorySamples& samples,
                                    const OutcomeDistribution& omega) {
    std::vector<double> d;
    d.reserve(samples.distributions.size());
    for (const auto& p : samples.distributions)
        d.push_back(distinguishability(p, omega));
    return estimate_mean(d);
}

Estimate average_distinguishability(const TrajectoryProbe& probe,
                                    const OutcomeDistribution& omega,
                                    const TimeAverageConfig& cfg) {
    if (omega.size() != probe.outcome_count())
        throw DimensionError("average_distinguishability: omega has the wrong outcome count");
    return average_distinguishability(sample_trajectory(probe, cfg), omega);
}

Estimate average_multi_distinguishability(std::span<const TrajectoryProbe> probes,
                                          std::span<const OutcomeDistribution> omegas,
                                          const TimeAverageConfig& cfg) {
    if (probes.empty())
        throw DomainError("average_multi_distinguishability: empty measurement set");
    if (probes.size() != omegas.size())
        throw DimensionError("average_multi_distinguishability: one omega per probe required");
    const std::vector<double> times = sample_times(cfg);
    std::vector<double> worst(times.size(), 0.0);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        if (omegas[i].size() != probes[i].outcome_count())
            throw DimensionError("average_multi_distinguishability: omega has the wrong outcome count");
        const auto dists = probes[i].sample_at(times);
        for (std::size_t k = 0; k < times.size(); ++k)
            worst[k] = std::max(worst[k], distinguishability(dists[k], omegas[i]));
    }
    return estimate_mean(worst);
}

}  // namespace equil
