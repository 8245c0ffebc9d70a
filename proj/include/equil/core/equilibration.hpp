#pragma once

#include <map>
#include <string>
#include <string_view>

#include "equil/core/distribution.hpp"
#include "equil/core/time_average.hpp"

namespace equil {

enum class Verdict { equilibrates, does_not_equilibrate, inconclusive };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view name);

// Three-valued decision with a two-standard-error margin on either side of
// epsilon.
Verdict classify(double mean, double standard_error, double epsilon);

struct EquilibrationReport {
    double mean_distinguishability = 0.0;
    double standard_error = 0.0;
    OutcomeDistribution equilibrium_distribution = OutcomeDistribution::uniform(1);
    double epsilon = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::map<std::string, double> bound_values;
};

// Builds a report from an estimate against the given equilibrium distribution.
EquilibrationReport make_report(const Estimate& estimate, OutcomeDistribution omega,
                                double epsilon);

// Samples the probe once, takes the empirical time average as the
// equilibrium distribution and estimates the average distinguishability
// from it on the same samples.
EquilibrationReport estimate_equilibration(const TrajectoryProbe& probe,
                                           const TimeAverageConfig& cfg, double epsilon);

// Sufficient condition for epsilon-equilibration under any dynamics: some
// outcome has equilibrium probability at least 1 - epsilon / 2.
bool check_sufficiency(const OutcomeDistribution& omega, double epsilon);

}  // namespace equil
