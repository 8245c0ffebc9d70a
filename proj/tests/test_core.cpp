#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "equil/core.hpp"
#include "equil/errors.hpp"
#include "oracles.hpp"

using namespace equil;

namespace {

OutcomeDistribution od(std::vector<double> p) { return OutcomeDistribution(std::move(p)); }

OutcomeDistribution random_distribution(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(n);
    for (double& x : w)
        x = e(rng);
    return OutcomeDistribution::normalized(w);
}

TrajectoryProbe cosine_probe() {
    return TrajectoryProbe(2, [](double t) {
        const double c = std::cos(t);
        return OutcomeDistribution({(1 + c) / 2, (1 - c) / 2});
    });
}

}  // namespace

TEST_CASE("outcome distribution validation") {
    CHECK_NOTHROW(od({0.3, 0.7}));
    CHECK_NOTHROW(od({1.0 + 1e-13, -1e-13}));
    CHECK_THROWS_AS(od({}), DataError);
    CHECK_THROWS_AS(od({0.5, 0.6}), DataError);
    CHECK_THROWS_AS(od({1.1, -0.1}), DataError);
    CHECK_THROWS_AS(od({0.5, std::nan("")}), DataError);
    CHECK(OutcomeDistribution::uniform(4)[2] == doctest::Approx(0.25));
    CHECK(OutcomeDistribution::indicator(3, 1)[1] == 1.0);
    CHECK(OutcomeDistribution::normalized({1, 3})[1] == doctest::Approx(0.75));
    CHECK(od({0.2, 0.5, 0.3}).most_likely_outcome() == 1);
}

TEST_CASE("distinguishability examples") {
    CHECK(distinguishability(od({0.3, 0.7}), od({0.3, 0.7})) == 0.0);
    CHECK(distinguishability(od({1, 0}), od({0, 1})) == doctest::Approx(1.0));
    CHECK(distinguishability(od({0.7, 0.3}), od({0.5, 0.5})) == doctest::Approx(0.2));
    CHECK_THROWS_AS(distinguishability(od({1, 0}), od({1, 0, 0})), DimensionError);
}

TEST_CASE("distinguishability is a metric on random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + trial % 9;
        const auto p = random_distribution(n, rng);
        const auto q = random_distribution(n, rng);
        const auto r = random_distribution(n, rng);
        const double pq = distinguishability(p, q);
        CHECK(pq >= 0.0);
        CHECK(pq <= 1.0);
        CHECK(pq == distinguishability(q, p));
        CHECK(distinguishability(p, p) == 0.0);
        CHECK(pq <= distinguishability(p, r) + distinguishability(r, q) + 1e-15);
    }
}

TEST_CASE("guessing probability") {
    CHECK(guessing_probability(0) == 0.5);
    CHECK(guessing_probability(1) == 1.0);
    CHECK(guessing_probability(0.2) == doctest::Approx(0.6));
    CHECK_THROWS_AS(guessing_probability(-0.1), DomainError);
    CHECK_THROWS_AS(guessing_probability(1.1), DomainError);
    // Affine and monotone.
    double prev = guessing_probability(0.0);
    for (int k = 1; k <= 100; ++k) {
        const double d = k / 100.0;
        const double g = guessing_probability(d);
        CHECK(g > prev);
        CHECK(g - prev == doctest::Approx(0.005));
        prev = g;
    }
}

TEST_CASE("multi-measurement") {
    using Pair = std::pair<OutcomeDistribution, OutcomeDistribution>;
    std::vector<Pair> one{{od({0.7, 0.3}), od({0.5, 0.5})}};
    CHECK(multi_distinguishability(one) == doctest::Approx(0.2));
    std::vector<Pair> three{{od({0.6, 0.4}), od({0.5, 0.5})},
                            {od({0.9, 0.1}), od({0.5, 0.5})},
                            {od({0.7, 0.3}), od({0.5, 0.5})}};
    CHECK(multi_distinguishability(three) == doctest::Approx(0.4));
    std::vector<Pair> same{{od({0.6, 0.4}), od({0.6, 0.4})}, {od({1, 0}), od({1, 0})}};
    CHECK(multi_distinguishability(same) == 0.0);
    CHECK_THROWS_AS(multi_distinguishability(std::vector<Pair>{}), DomainError);

    CHECK(multi_measurement_budget(0.1, 1) == doctest::Approx(0.1));
    CHECK(multi_measurement_budget(0.1, 5) == doctest::Approx(0.02));
    CHECK(multi_measurement_budget(0.3, 3) == doctest::Approx(0.1));
    CHECK_THROWS(multi_measurement_budget(0.1, 0));
}

TEST_CASE("time average config and sampling") {
    TimeAverageConfig cfg{10.0, 100, SamplingScheme::uniform_grid, 0};
    const auto grid = sample_times(cfg);
    REQUIRE(grid.size() == 100);
    CHECK(grid[0] == 0.0);
    CHECK(grid[99] == doctest::Approx(9.9));

    cfg.scheme = SamplingScheme::stratified_random;
    cfg.seed = 3;
    const auto strat = sample_times(cfg);
    for (std::size_t k = 0; k < strat.size(); ++k) {
        CHECK(strat[k] >= 0.1 * static_cast<double>(k));
        CHECK(strat[k] < 0.1 * static_cast<double>(k + 1));
    }
    CHECK(sample_times(cfg) == strat);
    cfg.seed = 4;
    CHECK(sample_times(cfg) != strat);

    CHECK_THROWS_AS((TimeAverageConfig{0.0, 10}.validate()), DomainError);
    CHECK_THROWS_AS((TimeAverageConfig{INFINITY, 10}.validate()), DomainError);
    CHECK_THROWS_AS((TimeAverageConfig{1.0, 1}.validate()), DomainError);
    CHECK(parse_sampling_scheme("uniform-grid") == SamplingScheme::uniform_grid);
    CHECK(to_string(SamplingScheme::stratified_random) == "stratified-random");
    CHECK_THROWS(parse_sampling_scheme("sobol"));
}

TEST_CASE("probe contract") {
    const auto c = constant_probe(od({0.4, 0.6}));
    CHECK(c.outcome_count() == 2);
    CHECK(c.sample(5.0) == od({0.4, 0.6}));
    CHECK_THROWS_AS(c.sample(-1.0), DomainError);
    TrajectoryProbe bad(3, [](double) { return od({0.5, 0.5}); });
    CHECK_THROWS_AS(bad.sample(0.0), DataError);
    TrajectoryProbe invalid(2, [](double t) { return od({t, 1 - t}); });
    CHECK_THROWS_AS(time_average_distribution(invalid, TimeAverageConfig{5.0, 10}), DataError);
}

TEST_CASE("time average distribution examples") {
    const auto c = constant_probe(od({0.4, 0.6}));
    const auto w = time_average_distribution(c, TimeAverageConfig{100.0, 50});
    CHECK(w[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(0.6).epsilon(1e-14));

    const TimeAverageConfig grid{2 * std::numbers::pi * 1e3, 10000, SamplingScheme::uniform_grid, 0};
    const auto avg = time_average_distribution(cosine_probe(), grid);
    CHECK(std::abs(avg[0] - 0.5) < 2e-3);
    CHECK(std::abs(avg[1] - 0.5) < 2e-3);
    double total = 0;
    for (double p : avg.probs())
        total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-15));

    // Indicator that sits in cell 0 for the first quarter of every unit period.
    TrajectoryProbe occupancy(2, [](double t) {
        return OutcomeDistribution::indicator(2, t - std::floor(t) < 0.25 ? 0 : 1);
    });
    const TimeAverageConfig cfg{1000.0, 20000, SamplingScheme::stratified_random, 5};
    const auto samples = sample_trajectory(occupancy, cfg);
    const auto occ = time_average_distribution(samples);
    const auto se = time_average_standard_errors(samples);
    CHECK(std::abs(occ[0] - 0.25) <= 3 * se[0]);
    CHECK(std::abs(occ[1] - 0.75) <= 3 * se[1]);
}

TEST_CASE("average distinguishability examples") {
    const auto omega = od({0.4, 0.6});
    const auto est = average_distinguishability(constant_probe(omega), omega, TimeAverageConfig{10.0, 20});
    CHECK(est.mean == 0.0);
    CHECK(est.standard_error == 0.0);

    const TimeAverageConfig cfg{2 * std::numbers::pi * 1e3, 10000, SamplingScheme::stratified_random, 1};
    const auto q = average_distinguishability(cosine_probe(), OutcomeDistribution::uniform(2), cfg);
    CHECK(std::abs(q.mean - oracle::mean_abs_cos() / 2) < 1e-2);

    for (double p : {0.1, 0.25, 0.5}) {
        TrajectoryProbe cells(2, [p](double t) {
            return OutcomeDistribution::indicator(2, t - std::floor(t) < p ? 0 : 1);
        });
        const TimeAverageConfig c2{1000.0, 20000, SamplingScheme::stratified_random, 9};
        const auto e = average_distinguishability(cells, od({p, 1 - p}), c2);
        CHECK(std::abs(e.mean - oracle::two_cell_average_distinguishability(p)) <=
              3 * e.standard_error + 1e-12);
    }
}

TEST_CASE("estimate is independent of evaluation order") {
    std::vector<double> v(1000);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (double& x : v)
        x = u(rng) * 1e-3;
    v[0] = 1e8;
    const auto a = estimate_mean(v);
    std::reverse(v.begin(), v.end());
    const auto b = estimate_mean(v);
    CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-15));
    CompensatedSum s;
    for (int k = 0; k < 10; ++k)
        s.add(0.1);
    CHECK(s.value() == 1.0);
}

TEST_CASE("verdicts") {
    CHECK(classify(0.05, 0.01, 0.1) == Verdict::equilibrates);
    CHECK(classify(0.09, 0.01, 0.1) == Verdict::inconclusive);
    CHECK(classify(0.13, 0.01, 0.1) == Verdict::does_not_equilibrate);
    CHECK(classify(0.12, 0.01, 0.1) == Verdict::inconclusive);
    CHECK(parse_verdict("does-not-equilibrate") == Verdict::does_not_equilibrate);
    CHECK(to_string(Verdict::inconclusive) == "inconclusive");

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 1000; ++k) {
        const double m = u(rng), se = 0.1 * u(rng), eps = u(rng);
        const auto v = classify(m, se, eps);
        if (v == Verdict::equilibrates)
            CHECK(m + 2 * se <= eps);
        if (v == Verdict::does_not_equilibrate)
            CHECK(m - 2 * se > eps);
    }
}

TEST_CASE("sufficiency examples") {
    CHECK(check_sufficiency(od({0.96, 0.04}), 0.1));
    CHECK(check_sufficiency(od({1.0, 0.0}), 0.0));
    CHECK(check_sufficiency(od({0.0, 1.0}), 0.3));
    CHECK_FALSE(check_sufficiency(od({0.5, 0.5}), 0.1));
}

TEST_CASE("mean distinguishability stays in [0, 1]") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SyntheticRecipe r{2 + seed % 6, seed % 2 ? SyntheticKind::jump_process : SyntheticKind::smooth_mixture,
                          1 + seed % 5, 0.0};
        const auto rep = estimate_equilibration(synthetic_probe(r, seed), TimeAverageConfig{100.0, 500, SamplingScheme::stratified_random, seed}, 0.1);
        CHECK(rep.mean_distinguishability >= 0.0);
        CHECK(rep.mean_distinguishability <= 1.0);
        CHECK(rep.standard_error >= 0.0);
    }
}

TEST_CASE("synthetic probes are deterministic and respect the dominant mass") {
    SyntheticRecipe r{5, SyntheticKind::smooth_mixture, 4, 0.9};
    const auto a = synthetic_probe(r, 11);
    const auto b = synthetic_probe(r, 11);
    for (double t : {0.0, 1.5, 77.0}) {
        CHECK(a.sample(t) == b.sample(t));
        CHECK(a.sample(t)[0] >= 0.9 - 1e-12);
    }
    r.kind = SyntheticKind::jump_process;
    const auto j = synthetic_probe(r, 3);
    // Piecewise constant with dwell times of at least 0.5.
    std::size_t changes = 0;
    for (int k = 1; k < 1000; ++k)
        changes += j.sample(0.01 * k) == j.sample(0.01 * (k - 1)) ? 0 : 1;
    CHECK(changes <= 20);
    CHECK(j.sample(40.5)[0] >= 0.9 - 1e-12);
}

TEST_CASE("sufficiency soundness on random synthetic probes") {
    // Sufficiency check on probes with no physics behind them.
    std::size_t applicable = 0, violations = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed);
        const double eps = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
        const double mass = std::uniform_real_distribution<double>(1 - eps / 2, 1.0)(rng);
        SyntheticRecipe r{2 + seed % 7,
                          seed % 2 ? SyntheticKind::jump_process : SyntheticKind::smooth_mixture,
                          1 + seed % 6, mass};
        const TimeAverageConfig cfg{200.0, 400, SamplingScheme::stratified_random, seed};
        const auto rep = estimate_equilibration(synthetic_probe(r, seed), cfg, eps);
        if (!check_sufficiency(rep.equilibrium_distribution, eps))
            continue;
        ++applicable;
        if (rep.mean_distinguishability > eps + 3 * rep.standard_error)
            ++violations;
    }
    CHECK(applicable >= 1000);
    CHECK(violations == 0);
}

TEST_CASE("max-distinguishability is at most the sum over measurements") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t k = 2 + seed % 4;
        std::vector<TrajectoryProbe> probes;
        std::vector<OutcomeDistribution> omegas;
        const TimeAverageConfig cfg{100.0, 300, SamplingScheme::stratified_random, seed};
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            probes.push_back(synthetic_probe({3, SyntheticKind::smooth_mixture, 3, 0.0}, seed * 10 + i));
            const auto s = sample_trajectory(probes.back(), cfg);
            omegas.push_back(time_average_distribution(s));
            sum += average_distinguishability(s, omegas.back()).mean;
        }
        const auto m = average_multi_distinguishability(probes, omegas, cfg);
        double best = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            best = std::max(best, average_distinguishability(probes[i], omegas[i], cfg).mean);
        CHECK(m.mean <= sum + 1e-12);
        CHECK(m.mean >= best - 1e-12);
    }
}
