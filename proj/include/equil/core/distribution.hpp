#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace equil {

// Tolerances for validating probability vectors.
inline constexpr double kEntryTolerance = 1e-12;
inline constexpr double kNormalizationTolerance = 1e-9;

// Probability vector over the N outcomes of a measurement.
//
// Entries lie in [0, 1] and sum to 1 up to kEntryTolerance and
// kNormalizationTolerance respectively. Construction throws DataError
// otherwise. Outcome indices are zero-based.
class OutcomeDistribution {
public:
    explicit OutcomeDistribution(std::vector<double> probs);

    static OutcomeDistribution indicator(std::size_t outcome_count, std::size_t outcome);
    static OutcomeDistribution uniform(std::size_t outcome_count);

    // Rescales a nonnegative vector so it sums to exactly one (up to
    // rounding), then validates.
    static OutcomeDistribution normalized(std::vector<double> weights);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t j) const { return probs_[j]; }
    std::span<const double> probs() const noexcept { return probs_; }

    double max_probability() const noexcept;
    std::size_t most_likely_outcome() const noexcept;

    friend bool operator==(const OutcomeDistribution&, const OutcomeDistribution&) = default;

private:
    std::vector<double> probs_;
};

// Half the L1 distance between outcome distributions: the advantage over
// chance in guessing which of two states was measured.
double distinguishability(const OutcomeDistribution& p, const OutcomeDistribution& q);

// Optimal probability of guessing correctly which of two equiprobable states
// was prepared, given their distinguishability d.
double guessing_probability(double d);

// Largest distinguishability over a set of measurements, each represented by
// the pair of distributions it assigns to the two states.
double multi_distinguishability(
    std::span<const std::pair<OutcomeDistribution, OutcomeDistribution>> pairs);

// Per-measurement tolerance that keeps the max-distinguishability over K
// measurements within epsilon.
double multi_measurement_budget(double epsilon, int measurement_count);

}  // namespace equil
