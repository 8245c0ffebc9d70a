// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "equil/bench.hpp"
#include "equil/classical.hpp"
#include "equil/core.hpp"
#include "equil/quantum.hpp"
#include "oracles.hpp"

using namespace equil;
namespace cl = equil::classical;
namespace qm = equil::quantum;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const double kGolden = (std::sqrt(5.0) - 1) / 2;

cl::PhasePoint random_point(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> c(dim);
    for (double& x : c)
        x = u(rng);
    return cl::PhasePoint(c);
}

struct ClassicalCase {
    cl::InvertibleMap map;
    bool exact = false;
};

// Two cells split along the first axis at `cut`.
cl::Partition slab_partition(std::size_t dim, double cut) {
    std::vector<std::vector<double>> cuts(dim);
    cuts[0] = {cut};
    return cl::Partition(cuts, {0, 1});
}

std::vector<ClassicalCase> classical_maps() {
    return {{cl::rotation({kGolden}), false},
            {cl::rotation({std::sqrt(2.0) - 1, std::sqrt(3.0) - 1}), false},
            {cl::cat_map(cl::CatArithmetic::exact_dyadic), true},
            {cl::cat_map(cl::CatArithmetic::floating), false}};
}

// ---------------------------------------------------------------------------

Outcome qubit_benchmark() {
    const auto records = bench::run_scenario(bench::load_scenario(std::string(EQUIL_SCENARIO_DIR) + "/qubit.json"));
    if (records.size() != 1 || records[0].error)
        return {false, "qubit scenario did not produce one clean record"};
    const auto& r = records[0];
    const double mean = r.report.mean_distinguishability;
    const double bound = *r.bounds.at(std::string(bench::kThm5)).value;
    const double expected_bound = 0.5 * std::sqrt(0.5);
    const bool ok = std::abs(mean - 1 / std::numbers::pi) <= 0.01 && std::abs(bound - expected_bound) < 1e-15 &&
                    mean <= bound;
    return {ok, fmt("<D> = %.5f (1/pi = %.5f), bound = %.5f", mean, 1 / std::numbers::pi, bound)};
}

struct QuantumInstance {
    std::size_t d = 0, n = 0, gap_degeneracy = 0;
    double d_eff = 0, mean = 0, se = 0, bound = 0;
};

std::vector<QuantumInstance> g_sweep;

Outcome bound_sweep() {
    std::size_t violations = 0, families[2] = {0, 0}, states[2] = {0, 0}, povms[2] = {0, 0};
    double worst_ratio = 0;
    std::uint64_t seed = 0;
    for (std::size_t d = 2; d <= 32; ++d) {
        for (int rep = 0; rep < 8; ++rep, ++seed) {
            std::mt19937_64 rng(seed);
            const auto family = rep % 2 ? qm::SpectrumFamily::equally_spaced : qm::SpectrumFamily::uniform;
            const auto state = (rep / 2) % 2 ? qm::StateKind::mixed : qm::StateKind::pure;
            const auto kind = (rep / 4) % 2 ? qm::PovmKind::general : qm::PovmKind::projective;
            const std::size_t n_max = kind == qm::PovmKind::projective ? std::min<std::size_t>(8, d) : 8;
            const std::size_t n = 2 + static_cast<std::size_t>(seed * 7 + d) % (n_max - 1);
            const auto h = qm::random_spectrum(d, family, rng);
            const auto rho = qm::random_state(d, state, rng);
            const auto povm = qm::random_povm(d, n, kind, rng);
            const auto omega = qm::equilibrium_distribution(rho, h, povm);
            const auto est = average_distinguishability(qm::quantum_probe(rho, h, povm), omega,
                                                        qm::default_time_average_config(h, seed));
            QuantumInstance q{d, n, qm::max_gap_degeneracy(h), qm::effective_dimension(rho, h), est.mean,
                              est.standard_error, 0};
            q.bound = qm::quantum_bound(n, q.gap_degeneracy, q.d_eff);
            violations += q.mean - 3 * q.se > q.bound ? 1 : 0;
            worst_ratio = std::max(worst_ratio, q.mean / q.bound);
            ++families[rep % 2];
            ++states[(rep / 2) % 2];
            ++povms[(rep / 4) % 2];
            g_sweep.push_back(q);
        }
    }
    const bool coverage = g_sweep.size() >= 200 && families[0] && families[1] && states[0] && states[1] &&
                          povms[0] && povms[1];
    return {coverage && violations == 0,
            fmt("%zu instances, d 2..32, N 2..8, %zu violations, max <D>/bound = %.3f", g_sweep.size(), violations,
                worst_ratio)};
}

Outcome second_moment_oracle() {
    std::size_t mismatches = 0, bound_failures = 0, count = 0, degenerate = 0;
    for (std::uint64_t k = 0; k < 60; ++k) {
        std::mt19937_64 rng(1000 + k);
        const std::size_t d = 2 + k % 6;
        qm::HamiltonianSpectrum h = [&] {
            switch (k % 3) {
            case 0:
                return qm::random_spectrum(d, qm::SpectrumFamily::uniform, rng);
            case 1:
                return qm::random_spectrum(d, qm::SpectrumFamily::equally_spaced, rng);
            default: {
                // Repeated levels on an integer ladder: degenerate levels and gaps.
                std::vector<double> levels(d);
                std::uniform_int_distribution<int> level(0, 3);
                for (double& e : levels)
                    e = level(rng);
                return qm::HamiltonianSpectrum::from_eigensystem(
                    qm::RVector(Eigen::Map<qm::RVector>(levels.data(), static_cast<Eigen::Index>(d))), qm::random_unitary(d, rng));
            }
            }
        }();
        if (h.smallest_gap() == 0)
            continue;
        const auto rho = qm::random_pure_state(d, rng);
        const std::size_t n = 2 + k % 3;
        const auto povm = qm::random_povm(d, std::min(n, d), qm::PovmKind::projective, rng);
        const qm::CMatrix& p = povm[0];
        const double tol = qm::default_gap_tolerance(h);
        const double exact = qm::second_moment_exact(rho, p, h, tol);
        const auto omega = qm::dephase(rho, h);

        std::vector<double> gaps;
        for (const auto& g : qm::GapTable(h, tol).entries())
            gaps.push_back(g.value);
        std::sort(gaps.begin(), gaps.end());
        double resolution = h.smallest_gap();
        for (std::size_t i = 1; i < gaps.size(); ++i)
            if (gaps[i] - gaps[i - 1] > tol)
                resolution = std::min(resolution, gaps[i] - gaps[i - 1]);
        const TimeAverageConfig cfg{1e3 * 2 * std::numbers::pi / resolution, 20000, SamplingScheme::stratified_random,
                                    k};
        const auto sampled = oracle::sampled_second_moment(rho.matrix(), p, h.eigenvalues(), h.eigenvectors(),
                                                           omega.matrix(), sample_times(cfg));
        mismatches += std::abs(exact - sampled.mean) <= 3 * sampled.standard_error + 1e-12 ? 0 : 1;
        bound_failures += exact <= qm::shifted_second_moment_bound(p, omega, std::min(n, d), qm::gap_matrix_norm(h, tol)) + 1e-12
                              ? 0
                              : 1;
        degenerate += qm::max_gap_degeneracy(h, tol) > 1 ? 1 : 0;
        ++count;
    }
    return {count >= 50 && degenerate > 0 && mismatches == 0 && bound_failures == 0,
            fmt("%zu instances (%zu with degenerate gaps), %zu outside 3 stderr, %zu above the shifted bound", count,
                degenerate, mismatches, bound_failures)};
}

Outcome classical_closed_form() {
    std::size_t count = 0, mismatches = 0;
    std::mt19937_64 rng(2000);
    for (const auto& [map, exact] : classical_maps()) {
        for (std::size_t cells = 2; cells <= 8; ++cells) {
            for (int rep = 0; rep < 3; ++rep) {
                const auto part = cl::random_box_partition(map.dimension(), cells, rng);
                auto x = random_point(map.dimension(), rng);
                if (exact)
                    x = cl::snap_to_dyadic(x);
                const TimeAverageConfig cfg{5000.0, 5000, SamplingScheme::uniform_grid, 0};
                const auto rep_ = estimate_equilibration(cl::classical_probe(x, map, part), cfg, 0.1);
                const double closed = cl::pure_average_distinguishability_closed_form(rep_.equilibrium_distribution);
                mismatches += std::abs(rep_.mean_distinguishability - closed) <= 3 * rep_.standard_error + 1e-12 ? 0 : 1;
                ++count;
            }
        }
    }
    return {count >= 50 && mismatches == 0,
            fmt("%zu cases (rotations and cat map, N 2..8), %zu mismatches", count, mismatches)};
}

Outcome necessity() {
    std::size_t runs = 0, equilibrated = 0, counterexamples = 0;
    std::mt19937_64 rng(3000);
    const auto maps = classical_maps();
    for (int trial = 0; trial < 600; ++trial) {
        const auto& [map, exact] = maps[static_cast<std::size_t>(trial) % maps.size()];
        const std::size_t cells = 2 + static_cast<std::size_t>(trial) % 7;
        // Half of the partitions have one dominant cell so that some runs equilibrate.
        const auto part = trial % 2 ? cl::random_box_partition(map.dimension(), cells, rng)
                                    : slab_partition(map.dimension(), 0.97);
        auto x = random_point(map.dimension(), rng);
        if (exact)
            x = cl::snap_to_dyadic(x);
        const TimeAverageConfig cfg{3000.0, 3000, SamplingScheme::uniform_grid, 0};
        const auto samples = sample_trajectory(cl::classical_probe(x, map, part), cfg);
        const auto omega = time_average_distribution(samples);
        const auto est = average_distinguishability(samples, omega);
        for (double eps = 0.05; eps < 1.0; eps += 0.05) {
            ++runs;
            if (est.mean <= eps - 3 * est.standard_error) {
                ++equilibrated;
                counterexamples += omega.max_probability() < 1 - eps ? 1 : 0;
            }
        }
    }
    // The shipped classical-pure scenarios through the bench runner.
    std::size_t records = 0;
    for (const char* file : {"rotation.json", "cat_map.json"})
        for (const auto& r : bench::run_scenario(bench::load_scenario(std::string(EQUIL_SCENARIO_DIR) + "/" + file))) {
            ++records;
            counterexamples += r.bounds.at(std::string(bench::kThm2)).status == bench::BoundStatus::violated ? 1 : 0;
        }
    return {counterexamples == 0 && equilibrated > 0,
            fmt("%zu (run, epsilon) pairs, %zu equilibrated, %zu scenario records, %zu counterexamples", runs,
                equilibrated, records, counterexamples)};
}

Outcome sufficiency() {
    std::size_t applicable[3] = {0, 0, 0}, violations = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed);
        const double eps = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
        const double mass = std::uniform_real_distribution<double>(1 - eps / 2, 1.0)(rng);
        SyntheticRecipe r{2 + seed % 7, seed % 2 ? SyntheticKind::jump_process : SyntheticKind::smooth_mixture,
                          1 + seed % 6, mass};
        const auto rep = estimate_equilibration(synthetic_probe(r, seed),
                                                TimeAverageConfig{200.0, 400, SamplingScheme::stratified_random, seed}, eps);
        if (!check_sufficiency(rep.equilibrium_distribution, eps))
            continue;
        ++applicable[0];
        violations += rep.mean_distinguishability > eps + 3 * rep.standard_error ? 1 : 0;
    }
    std::mt19937_64 rng(4000);
    const auto maps = classical_maps();
    for (int trial = 0; trial < 200; ++trial) {
        const auto& [map, exact] = maps[static_cast<std::size_t>(trial) % maps.size()];
        const double eps = 0.05 + 0.01 * (trial % 30);
        const double small = std::uniform_real_distribution<double>(0.0, eps / 2)(rng);
        const auto part = slab_partition(map.dimension(), 1 - small);
        auto x = random_point(map.dimension(), rng);
        if (exact)
            x = cl::snap_to_dyadic(x);
        const auto rep = estimate_equilibration(cl::classical_probe(x, map, part),
                                                TimeAverageConfig{4000.0, 4000, SamplingScheme::uniform_grid, 0}, eps);
        if (!check_sufficiency(rep.equilibrium_distribution, eps))
            continue;
        ++applicable[1];
        violations += rep.mean_distinguishability > eps + 3 * rep.standard_error ? 1 : 0;
    }
    for (std::uint64_t k = 0; k < 60; ++k) {
        std::mt19937_64 qrng(5000 + k);
        const std::size_t d = 2 + k % 12;
        const double eps = 0.05 + 0.005 * static_cast<double>(k);
        const auto h = qm::random_spectrum(d, k % 2 ? qm::SpectrumFamily::equally_spaced : qm::SpectrumFamily::uniform, qrng);
        const auto rho = qm::random_state(d, k % 3 ? qm::StateKind::pure : qm::StateKind::mixed, qrng);
        const auto povm = qm::near_identity_povm(d, 2 + k % 4, std::uniform_real_distribution<double>(0, eps / 2)(qrng), qrng);
        const auto omega = qm::equilibrium_distribution(rho, h, povm);
        if (!check_sufficiency(omega, eps))
            continue;
        ++applicable[2];
        const auto est = average_distinguishability(qm::quantum_probe(rho, h, povm), omega,
                                                    qm::default_time_average_config(h, k, 2000));
        violations += est.mean > eps + 3 * est.standard_error ? 1 : 0;
    }
    const bool covered = applicable[0] > 0 && applicable[1] > 0 && applicable[2] > 0;
    return {covered && violations == 0,
            fmt("%zu synthetic, %zu classical, %zu quantum probes with max omega >= 1 - eps/2, %zu violations",
                applicable[0], applicable[1], applicable[2], violations)};
}

Outcome mixed_states() {
    const auto cat = cl::cat_map(cl::CatArithmetic::exact_dyadic);
    std::size_t runs = 0, bound_failures = 0, audit_failures = 0;
    double worst_pass = 1.0;
    for (double delta : {0.0, 0.02, 0.1}) {
        for (std::size_t cells : {2u, 4u, 8u}) {
            std::mt19937_64 rng(6000 + static_cast<std::uint64_t>(delta * 1000) * 10 + cells);
            const auto e = cl::contaminated_cat_ensemble(1000, delta, rng);
            const auto part = cl::random_box_partition(2, cells, rng);
            const TimeAverageConfig cfg{1000.0, 1000, SamplingScheme::uniform_grid, 0};
            const auto est = cl::estimate_ensemble(e, cat, part, cfg);
            bound_failures += est.distinguishability.mean <=
                                      cl::mixed_equilibration_bound(cells, delta) + 3 * est.distinguishability.standard_error
                                  ? 0
                                  : 1;
            const auto audit = cl::audit_chaotic_pairs(e, cat, part, TimeAverageConfig{2000.0, 2000, SamplingScheme::uniform_grid, 0},
                                                       2000, 7000 + cells);
            worst_pass = std::min(worst_pass, audit.pass_fraction());
            audit_failures += audit.pass_fraction() >= 0.99 ? 0 : 1;
            ++runs;
        }
    }
    return {bound_failures == 0 && audit_failures == 0,
            fmt("%zu ensembles of 1000 points, %zu above sqrt(N delta/2) + 3 stderr, worst audit pass rate %.4f "
                "(2000 pairs each)",
                runs, bound_failures, worst_pass)};
}

Outcome purification() {
    std::size_t count = 0, failures = 0;
    double worst = 0;
    for (std::uint64_t k = 0; k < 24; ++k) {
        std::mt19937_64 rng(8000 + k);
        const std::size_t d = 2 + k % 6;
        const auto h = qm::random_spectrum(d, k % 2 ? qm::SpectrumFamily::equally_spaced : qm::SpectrumFamily::uniform, rng);
        const auto rho = qm::random_mixed_state(d, rng);
        const auto povm = qm::random_povm(d, 2 + k % 3, k % 2 ? qm::PovmKind::general : qm::PovmKind::projective, rng);
        const auto pur = qm::purify(rho);
        const auto h2 = qm::extend_with_null_ancilla(h, pur.ancilla_dimension);
        const auto povm2 = qm::extend_povm(povm, pur.ancilla_dimension);
        const auto w = qm::equilibrium_distribution(rho, h, povm);
        const auto w2 = qm::equilibrium_distribution(pur.state, h2, povm2);
        const auto a = qm::quantum_probe(rho, h, povm);
        const auto b = qm::quantum_probe(pur.state, h2, povm2);
        double gap = 0;
        for (double t : sample_times(TimeAverageConfig{500.0, 200, SamplingScheme::stratified_random, k}))
            gap = std::max(gap, std::abs(distinguishability(a.sample(t), w) - distinguishability(b.sample(t), w2)));
        worst = std::max(worst, gap);
        const double de = qm::effective_dimension(rho, h);
        const bool same = gap <= 1e-9 && std::abs(qm::effective_dimension(pur.state, h2) - de) <= 1e-12 * de &&
                          qm::max_gap_degeneracy(h2) == qm::max_gap_degeneracy(h) && pur.state.is_pure();
        failures += same ? 0 : 1;
        ++count;
    }
    return {count >= 20 && failures == 0,
            fmt("%zu mixed states, %zu failures, worst trajectory difference %.2e", count, failures, worst)};
}

Outcome corollary() {
    std::size_t checked = 0, strict = 0, failures = 0;
    for (const auto& q : g_sweep) {
        for (double eps : {q.bound, 0.1, 0.2, 0.3, 0.5}) {
            if (eps <= 0 || eps >= 1 || qm::max_outcomes_for_equilibration(eps, q.d_eff, q.gap_degeneracy) < q.n)
                continue;
            ++checked;
            const auto v = classify(q.mean, q.se, eps);
            strict += v == Verdict::equilibrates ? 1 : 0;
            failures += v == Verdict::equilibrates ? 0 : 1;
        }
    }
    return {!g_sweep.empty() && checked > 0 && failures == 0,
            fmt("%zu (instance, epsilon) pairs with N <= 4 d_eff eps^2/D_G + 1, %zu equilibrate, %zu do not", checked,
                strict, failures)};
}

Outcome multi_measurement() {
    std::size_t runs = 0, skipped = 0, violations = 0;
    for (int k : {2, 3, 5}) {
        for (std::uint64_t rep = 0; rep < 10; ++rep) {
            std::mt19937_64 rng(9000 + rep * 10 + static_cast<std::uint64_t>(k));
            const std::size_t d = 8 + 4 * rep;
            const double eps = 0.1 + 0.02 * static_cast<double>(rep);
            const auto h = qm::random_spectrum(d, rep % 2 ? qm::SpectrumFamily::equally_spaced : qm::SpectrumFamily::uniform, rng);
            const auto rho = qm::random_state(d, rep % 3 ? qm::StateKind::pure : qm::StateKind::mixed, rng);
            const auto cfg = qm::default_time_average_config(h, rep, 4000);
            std::vector<TrajectoryProbe> probes;
            std::vector<OutcomeDistribution> omegas;
            bool within_budget = true;
            for (int i = 0; i < k; ++i) {
                // Alternate near-identity and unrestricted random measurements.
                const auto povm = i % 2 ? qm::random_povm(d, 2, qm::PovmKind::general, rng)
                                        : qm::near_identity_povm(d, 3, eps / k, rng);
                probes.push_back(qm::quantum_probe(rho, h, povm));
                omegas.push_back(qm::equilibrium_distribution(rho, h, povm));
                const auto single = average_distinguishability(probes.back(), omegas.back(), cfg);
                within_budget = within_budget && single.mean <= multi_measurement_budget(eps, k);
            }
            if (!within_budget) {
                ++skipped;
                continue;
            }
            const auto m = average_multi_distinguishability(probes, omegas, cfg);
            violations += m.mean > eps + 3 * m.standard_error ? 1 : 0;
            ++runs;
        }
    }
    return {runs >= 10 && violations == 0,
            fmt("%zu runs with K in {2,3,5} and every <D_i> <= eps/K (%zu draws over budget skipped), %zu violations",
                runs, skipped, violations)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "qubit benchmark", qubit_benchmark, 1.0},
        {2, "quantum bound sweep", bound_sweep, 300.0},
        {3, "second moment oracle", second_moment_oracle, 120.0},
        {4, "classical closed form", classical_closed_form, 0},
        {5, "necessity", necessity, 0},
        {6, "sufficiency", sufficiency, 0},
        {7, "mixed classical states", mixed_states, 0},
        {8, "purification", purification, 0},
        {9, "outcome-count corollary", corollary, 0},
        {10, "multiple measurements", multi_measurement, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
            o.pass = false;
            o.detail += fmt(" [over the %.0f s limit]", c.limit_seconds);
        }
        std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
