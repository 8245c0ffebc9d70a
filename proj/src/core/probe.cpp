#include "equil/core/probe.hpp"

#include <sstream>

#include "equil/errors.hpp"

namespace equil {

TrajectoryProbe::TrajectoryProbe(std::size_t outcome_count, SampleFn sample, BatchFn batch)
    : outcome_count_(outcome_count), sample_(std::move(sample)), batch_(std::move(batch)) {
    if (outcome_count_ == 0)
        throw DomainError("trajectory probe needs at least one outcome");
    if (!sample_)
        throw DomainError("trajectory probe needs a sample function");
}

namespace {

void check_length(const OutcomeDistribution& p, std::size_t expected, double t) {
    if (p.size() != expected) {
        std::ostringstream msg;
        msg << "probe returned " << p.size() << " outcomes at t = " << t << ", expected "
            << expected;
        throw DataError(msg.str());
    }
}

}  // namespace

OutcomeDistribution TrajectoryProbe::sample(double t) const {
    if (!(t >= 0.0))
        throw DomainError("trajectory probe sampled at negative or NaN time");
    OutcomeDistribution p = sample_(t);
    check_length(p, outcome_count_, t);
    return p;
}

std::vector<OutcomeDistribution> TrajectoryProbe::sample_at(std::span<const double> times) const {
    for (double t : times)
        if (!(t >= 0.0))
            throw DomainError("trajectory probe sampled at negative or NaN time");
    if (!batch_) {
        std::vector<OutcomeDistribution> out;
        out.reserve(times.size());
        for (double t : times)
            out.push_back(sample(t));
        return out;
    }
    std::vector<OutcomeDistribution> out = batch_(times);
    if (out.size() != times.size())
        throw DataError("probe batch evaluator returned the wrong number of samples");
    for (std::size_t k = 0; k < out.size(); ++k)
        check_length(out[k], outcome_count_, times[k]);
    return out;
}

TrajectoryProbe constant_probe(OutcomeDistribution p) {
    const std::size_t n = p.size();
    return TrajectoryProbe(n, [p = std::move(p)](double) { return p; });
}

}  // namespace equil
