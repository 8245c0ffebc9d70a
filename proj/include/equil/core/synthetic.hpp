#pragma once

#include <cstdint>
#include <random>

#include "equil/core/probe.hpp"

namespace equil {

// Randomly generated trajectories with no physical model behind them, used
// to exercise the theory-independent statements.
enum class SyntheticKind {
    // Convex combination of random distributions with oscillating weights.
    smooth_mixture,
    // Piecewise-constant jumps between random distributions (telegraph-like).
    jump_process,
};

struct SyntheticRecipe {
    std::size_t outcome_count = 2;
    SyntheticKind kind = SyntheticKind::smooth_mixture;
    std::size_t components = 4;
    // When > 0, every component puts at least this much mass on outcome 0.
    double dominant_mass = 0.0;
};

TrajectoryProbe synthetic_probe(const SyntheticRecipe& recipe, std::uint64_t seed);

}  // namespace equil
