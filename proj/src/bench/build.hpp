#pragma once

#include <cstddef>
#include <variant>

#include "equil/bench/scenario.hpp"
#include "equil/classical/dynamics.hpp"
#include "equil/core/synthetic.hpp"
#include "equil/quantum/spectrum.hpp"
#include "equil/quantum/state.hpp"

namespace equil::bench::detail {

struct QuantumInstance {
    quantum::HamiltonianSpectrum hamiltonian;
    quantum::DensityMatrix state;
    quantum::POVM povm;
};

struct ClassicalPureInstance {
    classical::InvertibleMap map;
    classical::Partition partition;
    classical::PhasePoint point;
};

struct ClassicalEnsembleInstance {
    classical::InvertibleMap map;
    classical::Partition partition;
    classical::ClassicalEnsemble ensemble;
    std::size_t audit_pairs = 0;
};

struct SyntheticInstance {
    SyntheticRecipe recipe;
};

using Instance =
    std::variant<QuantumInstance, ClassicalPureInstance, ClassicalEnsembleInstance, SyntheticInstance>;

// Builds the system described by a resolved scenario (sweep values applied).
// Random parts are drawn from a generator seeded by the scenario seed.
Instance build_instance(const Scenario& s);

// Longest horizon allowed for floating-point cat map iteration, beyond which
// rounding has long since decorrelated the orbit from the true one.
inline constexpr double kFloatingCatHorizonCap = 1e6;

// Time-average settings for a built instance, filling in kind defaults.
TimeAverageConfig average_config(const Scenario& s, const Instance& instance);

}  // namespace equil::bench::detail
