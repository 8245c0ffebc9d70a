#include "equil/classical/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "equil/core/summation.hpp"
#include "equil/errors.hpp"

namespace equil::classical {

namespace {

std::size_t step_of(double t) { return static_cast<std::size_t>(std::floor(t)); }

// Evaluates `visit(k, states)` for each sample time in ascending order of
// time while iterating `states` forward once; `k` indexes the original times.
template <class Visit>
void sweep_times(std::span<const double> times, std::vector<PhasePoint> states,
                 const InvertibleMap& map, Visit visit) {
    std::vector<std::size_t> order(times.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });
    std::size_t current = 0;
    for (std::size_t k : order) {
        const std::size_t target = step_of(times[k]);
        for (; current < target; ++current)
            for (auto& s : states)
                s = map.forward(s);
        visit(k, states);
    }
}

void check_compatible(const InvertibleMap& map, const Partition& partition) {
    if (map.dimension() != partition.dimension())
        throw DimensionError("map and partition act on different phase-space dimensions");
}

}  // namespace

void ClassicalEnsemble::validate() const {
    if (points.empty())
        throw DataError("ensemble has no points");
    if (points.size() != weights.size() || points.size() != chaotic_flags.size())
        throw DataError("ensemble points, weights and chaotic flags differ in length");
    CompensatedSum total;
    for (double w : weights) {
        if (!(w >= 0.0))
            throw DataError("ensemble weights must be nonnegative");
        total.add(w);
    }
    if (std::abs(total.value() - 1.0) > kNormalizationTolerance)
        throw DataError("ensemble weights must sum to 1");
    for (const auto& p : points)
        if (p.dimension() != points.front().dimension())
            throw DataError("ensemble points differ in dimension");
}

ClassicalEnsemble ClassicalEnsemble::equal_weights(std::vector<PhasePoint> points,
                                                   std::vector<bool> chaotic_flags) {
    ClassicalEnsemble e;
    const double w = points.empty() ? 0.0 : 1.0 / static_cast<double>(points.size());
    e.weights.assign(points.size(), w);
    e.points = std::move(points);
    e.chaotic_flags = std::move(chaotic_flags);
    e.validate();
    return e;
}

double ClassicalEnsemble::effective_size() const {
    CompensatedSum s;
    for (double w : weights)
        s.add(w * w);
    return 1.0 / s.value();
}

double ClassicalEnsemble::non_chaotic_weight() const {
    CompensatedSum s;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (!chaotic_flags[i])
            s.add(weights[i]);
    return s.value();
}

PhasePoint evolve(const PhasePoint& x, const InvertibleMap& map, long long steps) {
    PhasePoint y = x;
    if (steps >= 0) {
        for (long long k = 0; k < steps; ++k)
            y = map.forward(y);
    } else {
        for (long long k = 0; k < -steps; ++k)
            y = map.backward(y);
    }
    return y;
}

std::vector<PhasePoint> orbit(const PhasePoint& x, const InvertibleMap& map, std::size_t steps) {
    std::vector<PhasePoint> out;
    out.reserve(steps);
    PhasePoint y = x;
    for (std::size_t k = 0; k < steps; ++k) {
        out.push_back(y);
        y = map.forward(y);
    }
    return out;
}

TrajectoryProbe classical_probe(const PhasePoint& x, const InvertibleMap& map,
                                const Partition& partition) {
    check_compatible(map, partition);
    const std::size_t n = partition.cell_count();
    auto sample = [=](double t) {
        const PhasePoint y = evolve(x, map, static_cast<long long>(step_of(t)));
        return OutcomeDistribution::indicator(n, partition.cell_of(y));
    };
    auto batch = [=](std::span<const double> times) {
        std::vector<OutcomeDistribution> out(times.size(), OutcomeDistribution::uniform(n));
        sweep_times(times, {x}, map, [&](std::size_t k, const std::vector<PhasePoint>& s) {
            out[k] = OutcomeDistribution::indicator(n, partition.cell_of(s.front()));
        });
        return out;
    };
    return TrajectoryProbe(n, sample, batch);
}

TrajectoryProbe ensemble_probe(const ClassicalEnsemble& e, const InvertibleMap& map,
                               const Partition& partition) {
    e.validate();
    check_compatible(map, partition);
    const std::size_t n = partition.cell_count();
    auto distribution = [n, partition, weights = e.weights](const std::vector<PhasePoint>& s) {
        std::vector<CompensatedSum> mass(n);
        for (std::size_t i = 0; i < s.size(); ++i)
            mass[partition.cell_of(s[i])].add(weights[i]);
        std::vector<double> p(n);
        for (std::size_t j = 0; j < n; ++j)
            p[j] = mass[j].value();
        return OutcomeDistribution::normalized(std::move(p));
    };
    auto sample = [=, points = e.points](double t) {
        std::vector<PhasePoint> s;
        s.reserve(points.size());
        for (const auto& x : points)
            s.push_back(evolve(x, map, static_cast<long long>(step_of(t))));
        return distribution(s);
    };
    auto batch = [=, points = e.points](std::span<const double> times) {
        std::vector<OutcomeDistribution> out(times.size(), OutcomeDistribution::uniform(n));
        sweep_times(times, points, map, [&](std::size_t k, const std::vector<PhasePoint>& s) {
            out[k] = distribution(s);
        });
        return out;
    };
    return TrajectoryProbe(n, sample, batch);
}

double pure_average_distinguishability_closed_form(const OutcomeDistribution& omega) {
    CompensatedSum s;
    for (double p : omega.probs())
        s.add(p * p);
    return std::max(0.0, 1.0 - s.value());
}

bool check_necessity(const OutcomeDistribution& omega, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("check_necessity: epsilon must lie in [0, 1)");
    return omega.max_probability() >= 1.0 - epsilon;
}

double mixed_equilibration_bound(std::size_t outcome_count, double delta) {
    if (outcome_count < 1)
        throw DomainError("mixed_equilibration_bound: need at least one outcome");
    if (!(delta >= 0.0 && delta <= 0.5))
        throw DomainError("mixed_equilibration_bound: delta must lie in [0, 1/2]");
    return std::sqrt(static_cast<double>(outcome_count) * delta / 2.0);
}

// Orbit indicators of mixing maps stay correlated over a few steps, so the
// defect uses batch means rather than the naive standard error.
constexpr std::size_t kDefectBatches = 50;

CorrelationDefect correlation_defect(const PhasePoint& x, const PhasePoint& y,
                                     const InvertibleMap& map, const Partition& partition,
                                     const TimeAverageConfig& cfg) {
    check_compatible(map, partition);
    const std::vector<double> times = sample_times(cfg);
    const std::size_t m = times.size();
    const std::size_t n = partition.cell_count();
    std::vector<std::size_t> cx(m), cy(m);
    sweep_times(times, {x, y}, map, [&](std::size_t k, const std::vector<PhasePoint>& s) {
        cx[k] = partition.cell_of(s[0]);
        cy[k] = partition.cell_of(s[1]);
    });

    std::vector<double> occ_x(n, 0.0), occ_y(n, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        occ_x[cx[k]] += 1.0;
        occ_y[cy[k]] += 1.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        occ_x[j] /= static_cast<double>(m);
        occ_y[j] /= static_cast<double>(m);
    }

    CorrelationDefect out;
    out.per_outcome.resize(n);
    out.per_outcome_standard_error.resize(n);
    std::vector<double> centered(m), total(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            const double a = (cx[k] == j ? 1.0 : 0.0) - occ_x[j];
            const double b = (cy[k] == j ? 1.0 : 0.0) - occ_y[j];
            centered[k] = a * b;
            total[k] += a * b;
        }
        const Estimate e = estimate_mean_batched(centered, kDefectBatches);
        out.per_outcome[j] = e.mean;
        out.per_outcome_standard_error[j] = e.standard_error;
    }
    const Estimate t = estimate_mean_batched(total, kDefectBatches);
    out.total = t.mean;
    out.total_standard_error = t.standard_error;
    return out;
}

EnsembleEstimate estimate_ensemble(const ClassicalEnsemble& e, const InvertibleMap& map,
                                   const Partition& partition, const TimeAverageConfig& cfg) {
    const TrajectoryProbe probe = ensemble_probe(e, map, partition);
    const TrajectorySamples samples = sample_trajectory(probe, cfg);
    EnsembleEstimate out;
    out.omega = time_average_distribution(samples);
    const Estimate d = average_distinguishability(samples, out.omega);
    const double n_eff = e.effective_size();

    std::vector<double> quad(samples.distributions.size());
    for (std::size_t k = 0; k < quad.size(); ++k) {
        double s = 0.0;
        for (double p : samples.distributions[k].probs())
            s += std::sqrt(std::max(0.0, p * (1.0 - p)) / n_eff);
        quad[k] = 0.5 * s;
    }
    out.time_standard_error = d.standard_error;
    out.quadrature_standard_error = estimate_mean(quad).mean;
    out.distinguishability.mean = d.mean;
    out.distinguishability.standard_error =
        std::hypot(out.time_standard_error, out.quadrature_standard_error);
    return out;
}

PairAudit audit_chaotic_pairs(const ClassicalEnsemble& e, const InvertibleMap& map,
                              const Partition& partition, const TimeAverageConfig& cfg,
                              std::size_t pair_count, std::uint64_t seed, double z) {
    e.validate();
    std::vector<std::size_t> chaotic;
    for (std::size_t i = 0; i < e.points.size(); ++i)
        if (e.chaotic_flags[i])
            chaotic.push_back(i);
    PairAudit audit;
    if (chaotic.size() < 2)
        return audit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, chaotic.size() - 1);
    for (std::size_t p = 0; p < pair_count; ++p) {
        const std::size_t a = chaotic[pick(rng)];
        std::size_t b = a;
        while (b == a)
            b = chaotic[pick(rng)];
        const CorrelationDefect d = correlation_defect(e.points[a], e.points[b], map, partition, cfg);
        ++audit.pairs;
        const double tol = d.total_standard_error > 0.0 ? z * d.total_standard_error : 1e-12;
        if (std::abs(d.total) <= tol)
            ++audit.passed;
    }
    return audit;
}

ClassicalEnsemble contaminated_cat_ensemble(std::size_t size, double delta, std::mt19937_64& rng) {
    if (size == 0)
        throw DomainError("ensemble size must be positive");
    if (!(delta >= 0.0 && delta <= 1.0))
        throw DomainError("contamination fraction must lie in [0, 1]");
    const auto periodic = static_cast<std::size_t>(std::llround(delta * static_cast<double>(size)));
    std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << kDyadicBits) - 1);
    std::uniform_int_distribution<int> quarter(0, 3);
    const double scale = std::ldexp(1.0, -kDyadicBits);
    std::vector<PhasePoint> points;
    std::vector<bool> flags;
    points.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        if (i < periodic) {
            points.push_back(PhasePoint({quarter(rng) / 4.0, quarter(rng) / 4.0}));
            flags.push_back(false);
        } else {
            const double x = static_cast<double>(word(rng)) * scale;
            const double y = static_cast<double>(word(rng)) * scale;
            points.push_back(PhasePoint({x, y}));
            flags.push_back(true);
        }
    }
    return ClassicalEnsemble::equal_weights(std::move(points), std::move(flags));
}

void write_orbit_csv(std::ostream& os, const PhasePoint& x, const InvertibleMap& map,
                     const Partition& partition, std::size_t steps) {
    check_compatible(map, partition);
    os << "step";
    for (std::size_t i = 0; i < x.dimension(); ++i)
        os << ",x" << i;
    os << ",cell\n";
    const auto old_precision = os.precision(17);
    PhasePoint y = x;
    for (std::size_t k = 0; k < steps; ++k) {
        os << k;
        for (double c : y.coords())
            os << ',' << c;
        os << ',' << partition.cell_of(y) << '\n';
        y = map.forward(y);
    }
    os.precision(old_precision);
    if (!os)
        throw IoError("failed writing orbit CSV");
}

}  // namespace equil::classical
