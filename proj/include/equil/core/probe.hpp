#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "equil/core/distribution.hpp"

namespace equil {

// Outcome distribution of a fixed measurement on an evolving state, as a
// function of time. This is the only view of the dynamics the theory-
// independent estimators need.
//
// `sample(0)` must be the distribution of the initial state. Implementations
// may supply a batch evaluator to share work across times (e.g. iterating a
// map once for many sample times); the batch evaluator must agree with the
// pointwise one.
class TrajectoryProbe {
public:
    using SampleFn = std::function<OutcomeDistribution(double)>;
    using BatchFn = std::function<std::vector<OutcomeDistribution>(std::span<const double>)>;

    TrajectoryProbe(std::size_t outcome_count, SampleFn sample, BatchFn batch = {});

    std::size_t outcome_count() const noexcept { return outcome_count_; }

    // Throws DomainError for t < 0 and DataError if the underlying callable
    // returns a distribution of the wrong length.
    OutcomeDistribution sample(double t) const;

    std::vector<OutcomeDistribution> sample_at(std::span<const double> times) const;

private:
    std::size_t outcome_count_;
    SampleFn sample_;
    BatchFn batch_;
};

// A probe whose distribution never changes.
TrajectoryProbe constant_probe(OutcomeDistribution p);

}  // namespace equil
