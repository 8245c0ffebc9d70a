#include "equil/core/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "equil/core/summation.hpp"
#include "equil/errors.hpp"

namespace equil {

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty())
        throw DataError("outcome distribution must have at least one outcome");
    CompensatedSum total;
    for (std::size_t j = 0; j < probs_.size(); ++j) {
        const double p = probs_[j];
        if (!std::isfinite(p) || p < -kEntryTolerance || p > 1.0 + kEntryTolerance) {
            std::ostringstream msg;
            msg << "outcome probability " << j << " = " << p << " outside [0, 1]";
            throw DataError(msg.str());
        }
        total.add(p);
    }
    if (std::abs(total.value() - 1.0) > kNormalizationTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "outcome probabilities sum to " << total.value() << ", not 1";
        throw DataError(msg.str());
    }
}

OutcomeDistribution OutcomeDistribution::indicator(std::size_t outcome_count, std::size_t outcome) {
    if (outcome >= outcome_count)
        throw DomainError("indicator outcome index out of range");
    std::vector<double> p(outcome_count, 0.0);
    p[outcome] = 1.0;
    return OutcomeDistribution(std::move(p));
}

OutcomeDistribution OutcomeDistribution::uniform(std::size_t outcome_count) {
    if (outcome_count == 0)
        throw DomainError("uniform distribution needs at least one outcome");
    return OutcomeDistribution(
        std::vector<double>(outcome_count, 1.0 / static_cast<double>(outcome_count)));
}

OutcomeDistribution OutcomeDistribution::normalized(std::vector<double> weights) {
    CompensatedSum total;
    for (double w : weights) {
        if (!(w >= -kEntryTolerance))
            throw DataError("negative or non-finite weight in normalization");
        total.add(w);
    }
    const double s = total.value();
    if (!(s > 0.0) || !std::isfinite(s))
        throw DataError("cannot normalize weights with non-positive total");
    for (double& w : weights)
        w = std::max(0.0, w) / s;
    return OutcomeDistribution(std::move(weights));
}

double OutcomeDistribution::max_probability() const noexcept {
    return *std::max_element(probs_.begin(), probs_.end());
}

std::size_t OutcomeDistribution::most_likely_outcome() const noexcept {
    return static_cast<std::size_t>(
        std::distance(probs_.begin(), std::max_element(probs_.begin(), probs_.end())));
}

double distinguishability(const OutcomeDistribution& p, const OutcomeDistribution& q) {
    if (p.size() != q.size())
        throw DimensionError("distinguishability: distributions have different outcome counts");
    CompensatedSum l1;
    for (std::size_t j = 0; j < p.size(); ++j)
        l1.add(std::abs(p[j] - q[j]));
    return std::clamp(0.5 * l1.value(), 0.0, 1.0);
}

double guessing_probability(double d) {
    if (!(d >= 0.0 && d <= 1.0))
        throw DomainError("guessing_probability: distinguishability must lie in [0, 1]");
    return 0.5 + 0.5 * d;
}

double multi_distinguishability(
    std::span<const std::pair<OutcomeDistribution, OutcomeDistribution>> pairs) {
    if (pairs.empty())
        throw DomainError("multi_distinguishability: empty measurement set");
    double best = 0.0;
    for (const auto& [p, q] : pairs)
        best = std::max(best, distinguishability(p, q));
    return best;
}

double multi_measurement_budget(double epsilon, int measurement_count) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("multi_measurement_budget: epsilon must lie in [0, 1)");
    if (measurement_count < 1)
        throw DomainError("multi_measurement_budget: need at least one measurement");
    return epsilon / measurement_count;
}

}  // namespace equil
