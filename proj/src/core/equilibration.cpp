#include "equil/core/equilibration.hpp"

#include "equil/errors.hpp"

namespace equil {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::equilibrates:
        return "equilibrates";
    case Verdict::does_not_equilibrate:
        return "does-not-equilibrate";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

Verdict parse_verdict(std::string_view name) {
    if (name == "equilibrates")
        return Verdict::equilibrates;
    if (name == "does-not-equilibrate")
        return Verdict::does_not_equilibrate;
    if (name == "inconclusive")
        return Verdict::inconclusive;
    throw DomainError("unknown verdict '" + std::string(name) + "'");
}

Verdict classify(double mean, double standard_error, double epsilon) {
    if (mean + 2.0 * standard_error <= epsilon)
        return Verdict::equilibrates;
    if (mean - 2.0 * standard_error > epsilon)
        return Verdict::does_not_equilibrate;
    return Verdict::inconclusive;
}

EquilibrationReport make_report(const Estimate& estimate, OutcomeDistribution omega,
                                double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("epsilon must lie in [0, 1)");
    EquilibrationReport r;
    r.mean_distinguishability = estimate.mean;
    r.standard_error = estimate.standard_error;
    r.equilibrium_distribution = std::move(omega);
    r.epsilon = epsilon;
    r.verdict = classify(estimate.mean, estimate.standard_error, epsilon);
    return r;
}

EquilibrationReport estimate_equilibration(const TrajectoryProbe& probe,
                                           const TimeAverageConfig& cfg, double epsilon) {
    const TrajectorySamples samples = sample_trajectory(probe, cfg);
    OutcomeDistribution omega = time_average_distribution(samples);
    const Estimate d = average_distinguishability(samples, omega);
    return make_report(d, std::move(omega), epsilon);
}

bool check_sufficiency(const OutcomeDistribution& omega, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("check_sufficiency: epsilon must lie in [0, 1)");
    return omega.max_probability() >= 1.0 - 0.5 * epsilon;
}

}  // namespace equil
