#include "equil/core/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "equil/errors.hpp"

namespace equil {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<double> random_simplex_point(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (double& x : w) {
        x = expo(rng);
        total += x;
    }
    for (double& x : w)
        x /= total;
    return w;
}

struct Components {
    std::vector<std::vector<double>> dists;
};

Components make_components(const SyntheticRecipe& r, std::mt19937_64& rng) {
    Components c;
    for (std::size_t k = 0; k < r.components; ++k) {
        std::vector<double> q = random_simplex_point(r.outcome_count, rng);
        if (r.dominant_mass > 0.0) {
            for (double& x : q)
                x *= 1.0 - r.dominant_mass;
            q[0] += r.dominant_mass;
        }
        c.dists.push_back(std::move(q));
    }
    return c;
}

}  // namespace

TrajectoryProbe synthetic_probe(const SyntheticRecipe& recipe, std::uint64_t seed) {
    if (recipe.outcome_count == 0 || recipe.components == 0)
        throw DomainError("synthetic probe needs outcomes and components");
    if (!(recipe.dominant_mass >= 0.0 && recipe.dominant_mass <= 1.0))
        throw DomainError("synthetic probe dominant mass must lie in [0, 1]");

    std::mt19937_64 rng(seed);
    Components comps = make_components(recipe, rng);
    const std::size_t n = recipe.outcome_count;
    const std::size_t k_count = recipe.components;

    if (recipe.kind == SyntheticKind::smooth_mixture) {
        std::uniform_real_distribution<double> amp(0.0, 0.95);
        std::uniform_real_distribution<double> freq(0.2, 3.0);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        std::vector<double> a(k_count), f(k_count), phi(k_count);
        for (std::size_t k = 0; k < k_count; ++k) {
            a[k] = amp(rng);
            f[k] = freq(rng);
            phi[k] = phase(rng);
        }
        return TrajectoryProbe(n, [=, d = std::move(comps.dists)](double t) {
            std::vector<double> p(n, 0.0);
            double total = 0.0;
            for (std::size_t k = 0; k < k_count; ++k) {
                const double lambda = 1.0 + a[k] * std::cos(f[k] * t + phi[k]);
                total += lambda;
                for (std::size_t j = 0; j < n; ++j)
                    p[j] += lambda * d[k][j];
            }
            for (double& x : p)
                x /= total;
            return OutcomeDistribution::normalized(std::move(p));
        });
    }

    std::uniform_real_distribution<double> dwell(0.5, 2.0);
    const double tau = dwell(rng);
    const std::uint64_t key = splitmix64(seed ^ 0x5eedULL);
    return TrajectoryProbe(n, [=, d = std::move(comps.dists)](double t) {
        const auto interval = static_cast<std::uint64_t>(std::floor(t / tau));
        const std::size_t k = splitmix64(key + interval) % k_count;
        return OutcomeDistribution::normalized(d[k]);
    });
}

}  // namespace equil
