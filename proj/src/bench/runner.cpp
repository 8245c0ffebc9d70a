#include "equil/bench/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "build.hpp"
#include "equil/classical/dynamics.hpp"
#include "equil/core/synthetic.hpp"
#include "equil/errors.hpp"
#include "equil/quantum/dynamics.hpp"

namespace equil::bench {

std::string_view to_string(BoundStatus s) {
    switch (s) {
    case BoundStatus::satisfied:
        return "satisfied";
    case BoundStatus::violated:
        return "violated";
    case BoundStatus::not_applicable:
        return "not-applicable";
    }
    return "unknown";
}

BoundStatus parse_bound_status(std::string_view s) {
    for (auto b : {BoundStatus::satisfied, BoundStatus::violated, BoundStatus::not_applicable})
        if (to_string(b) == s)
            return b;
    throw DataError("unknown bound status '" + std::string(s) + "'");
}

bool RunRecord::any_violation() const {
    return std::any_of(bounds.begin(), bounds.end(),
                       [](const auto& kv) { return kv.second.status == BoundStatus::violated; });
}

bool operator==(const RunRecord& a, const RunRecord& b) {
    const auto& ra = a.report;
    const auto& rb = b.report;
    return a.scenario == b.scenario && a.parameters == b.parameters &&
           ra.mean_distinguishability == rb.mean_distinguishability &&
           ra.standard_error == rb.standard_error &&
           ra.equilibrium_distribution == rb.equilibrium_distribution && ra.epsilon == rb.epsilon &&
           ra.verdict == rb.verdict && ra.bound_values == rb.bound_values &&
           a.outcomes == b.outcomes && a.d_eff == b.d_eff && a.gap_degeneracy == b.gap_degeneracy &&
           a.bounds == b.bounds && a.diagnostics == b.diagnostics &&
           a.wall_time_seconds == b.wall_time_seconds && a.seed == b.seed && a.error == b.error;
}

namespace {

constexpr double kStatisticalMargin = 3.0;
// Fraction of audited chaotic pairs that must decorrelate for the mixed-state
// bound to be checked.
constexpr double kAuditPassFraction = 0.99;

// Upper bound on <D>: violated when the estimate exceeds it by more than the
// statistical margin.
BoundCheck upper_bound_check(double bound, const EquilibrationReport& r) {
    const bool over =
        r.mean_distinguishability - kStatisticalMargin * r.standard_error > bound;
    return {bound, over ? BoundStatus::violated : BoundStatus::satisfied};
}

// Sufficiency: if some outcome carries at least 1 - eps/2 of the equilibrium
// weight, <D> must not exceed eps.
BoundCheck sufficiency_check(const EquilibrationReport& r) {
    const double threshold = 1.0 - r.epsilon / 2.0;
    if (!check_sufficiency(r.equilibrium_distribution, r.epsilon))
        return {threshold, BoundStatus::not_applicable};
    return {threshold, upper_bound_check(r.epsilon, r).status};
}

// Necessity for pure classical states: an equilibrating run must have an
// outcome with weight at least 1 - eps.
BoundCheck necessity_check(const EquilibrationReport& r) {
    const double threshold = 1.0 - r.epsilon;
    const bool equilibrated =
        r.mean_distinguishability <= r.epsilon - kStatisticalMargin * r.standard_error;
    const bool counterexample =
        equilibrated && !classical::check_necessity(r.equilibrium_distribution, r.epsilon);
    return {threshold, counterexample ? BoundStatus::violated : BoundStatus::satisfied};
}

void run_quantum(const detail::QuantumInstance& q, const Scenario& s, const TimeAverageConfig& cfg,
                 RunRecord& rec) {
    const auto omega = quantum::equilibrium_distribution(q.state, q.hamiltonian, q.povm);
    const auto probe = quantum::quantum_probe(q.state, q.hamiltonian, q.povm);
    const auto est = average_distinguishability(probe, omega, cfg);
    rec.report = make_report(est, omega, s.epsilon);

    const double tol = s.gap_tolerance.value_or(quantum::default_gap_tolerance(q.hamiltonian));
    const double d_eff = quantum::effective_dimension(q.state, q.hamiltonian);
    const std::size_t dg = quantum::max_gap_degeneracy(q.hamiltonian, tol);
    const std::size_t n = q.povm.outcome_count();
    rec.d_eff = d_eff;
    rec.gap_degeneracy = dg;
    rec.bounds[std::string(kThm5)] = upper_bound_check(quantum::quantum_bound(n, dg, d_eff), rec.report);

    const auto sens = quantum::gap_degeneracy_sensitivity(q.hamiltonian, tol);
    rec.diagnostics["gap_tolerance"] = tol;
    rec.diagnostics["D_G_tol_x0.1"] = static_cast<double>(sens[0]);
    rec.diagnostics["D_G_tol_x1"] = static_cast<double>(sens[1]);
    rec.diagnostics["D_G_tol_x10"] = static_cast<double>(sens[2]);
    rec.diagnostics["thm5_bound_without_shift"] =
        quantum::quantum_bound_without_identity_shift(n, dg, d_eff);
    rec.diagnostics["max_outcomes_certified"] =
        static_cast<double>(quantum::max_outcomes_for_equilibration(s.epsilon, d_eff, dg));
    rec.diagnostics["purity"] = q.state.purity();
    // No gaps: D_G is set to 1 and the bound is vacuous.
    if (q.hamiltonian.eigenspace_count() == 1)
        rec.diagnostics["single_eigenspace"] = 1.0;
    rec.diagnostics["horizon"] = cfg.horizon;
}

void run_classical_pure(const detail::ClassicalPureInstance& c, const Scenario& s,
                        const TimeAverageConfig& cfg, RunRecord& rec) {
    const auto probe = classical::classical_probe(c.point, c.map, c.partition);
    rec.report = estimate_equilibration(probe, cfg, s.epsilon);
    rec.bounds[std::string(kThm2)] = necessity_check(rec.report);
    rec.diagnostics["closed_form"] =
        classical::pure_average_distinguishability_closed_form(rec.report.equilibrium_distribution);
    rec.diagnostics["horizon"] = cfg.horizon;
}

void run_classical_ensemble(const detail::ClassicalEnsembleInstance& c, const Scenario& s,
                            const TimeAverageConfig& cfg, RunRecord& rec) {
    const auto est = classical::estimate_ensemble(c.ensemble, c.map, c.partition, cfg);
    rec.report = make_report(est.distinguishability, est.omega, s.epsilon);
    const double delta = c.ensemble.non_chaotic_weight();
    rec.diagnostics["delta"] = delta;
    rec.diagnostics["time_stderr"] = est.time_standard_error;
    rec.diagnostics["quadrature_stderr"] = est.quadrature_standard_error;
    rec.diagnostics["effective_size"] = c.ensemble.effective_size();
    rec.diagnostics["horizon"] = cfg.horizon;

    BoundCheck thm3;
    if (delta <= 0.5) {
        thm3 = upper_bound_check(classical::mixed_equilibration_bound(c.partition.cell_count(), delta),
                                 rec.report);
        if (c.audit_pairs > 0) {
            const auto audit = classical::audit_chaotic_pairs(c.ensemble, c.map, c.partition, cfg,
                                                              c.audit_pairs, s.seed);
            rec.diagnostics["audit_pairs"] = static_cast<double>(audit.pairs);
            rec.diagnostics["audit_pass_fraction"] = audit.pass_fraction();
            // The bound presumes decorrelated chaotic orbits; without that it
            // is not a statement about this ensemble.
            if (audit.pass_fraction() < kAuditPassFraction)
                thm3.status = BoundStatus::not_applicable;
        }
    }
    rec.bounds[std::string(kThm3)] = thm3;
}

void run_synthetic(const detail::SyntheticInstance& syn, const Scenario& s,
                   const TimeAverageConfig& cfg, RunRecord& rec) {
    const auto probe = synthetic_probe(syn.recipe, s.seed);
    rec.report = estimate_equilibration(probe, cfg, s.epsilon);
    rec.diagnostics["horizon"] = cfg.horizon;
}

}  // namespace

RunRecord run_point(const SweepPoint& point, const std::string& scenario_name) {
    const Scenario& s = point.resolved;
    RunRecord rec;
    rec.scenario = scenario_name;
    rec.parameters = point.parameters;
    rec.seed = s.seed;
    rec.report.epsilon = s.epsilon;
    for (auto key : {kThm1, kThm2, kThm3, kThm5})
        rec.bounds[std::string(key)] = BoundCheck{};

    const auto start = std::chrono::steady_clock::now();
    try {
        const auto instance = detail::build_instance(s);
        const auto cfg = detail::average_config(s, instance);
        std::visit(
            [&](const auto& inst) {
                using T = std::decay_t<decltype(inst)>;
                if constexpr (std::is_same_v<T, detail::QuantumInstance>)
                    run_quantum(inst, s, cfg, rec);
                else if constexpr (std::is_same_v<T, detail::ClassicalPureInstance>)
                    run_classical_pure(inst, s, cfg, rec);
                else if constexpr (std::is_same_v<T, detail::ClassicalEnsembleInstance>)
                    run_classical_ensemble(inst, s, cfg, rec);
                else
                    run_synthetic(inst, s, cfg, rec);
            },
            instance);
        rec.outcomes = rec.report.equilibrium_distribution.size();
        rec.bounds[std::string(kThm1)] = sufficiency_check(rec.report);
        rec.diagnostics["max_omega"] = rec.report.equilibrium_distribution.max_probability();
        for (const auto& [key, check] : rec.bounds)
            if (check.value)
                rec.report.bound_values[key] = *check.value;
    } catch (const std::exception& e) {
        rec.error = e.what();
        for (auto& [key, check] : rec.bounds)
            check = BoundCheck{};
    }
    rec.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::vector<RunRecord> run_scenario(const Scenario& s, unsigned threads) {
    const auto points = expand_sweep(s);
    std::vector<RunRecord> records(points.size());
    if (points.empty())
        return records;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++)
            records[i] = run_point(points[i], s.name);
    };
    if (threads == 1) {
        worker();
        return records;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return records;
}

int exit_code(const std::vector<RunRecord>& records) {
    bool violated = false;
    for (const auto& r : records) {
        if (r.error)
            return 1;
        violated = violated || r.any_violation();
    }
    return violated ? 2 : 0;
}

}  // namespace equil::bench
