#pragma once

#include <cstddef>
#include <random>
#include <string_view>

#include "equil/quantum/spectrum.hpp"
#include "equil/quantum/state.hpp"

namespace equil::quantum {

enum class SpectrumFamily { uniform, equally_spaced };
enum class PovmKind { projective, general };
enum class StateKind { pure, mixed };

std::string_view to_string(SpectrumFamily f);
std::string_view to_string(PovmKind k);
std::string_view to_string(StateKind k);
SpectrumFamily parse_spectrum_family(std::string_view s);
PovmKind parse_povm_kind(std::string_view s);
StateKind parse_state_kind(std::string_view s);

// Levels drawn uniformly from [0, 1) (generic gaps) or equally spaced on
// [0, 1] (maximal gap degeneracy d - 1), in a Haar-random eigenbasis.
HamiltonianSpectrum random_spectrum(std::size_t d, SpectrumFamily family, std::mt19937_64& rng);

// Spherically uniform pure state.
DensityMatrix random_pure_state(std::size_t d, std::mt19937_64& rng);

// G G^dagger / tr(G G^dagger) for a square complex Ginibre matrix G.
DensityMatrix random_mixed_state(std::size_t d, std::mt19937_64& rng);

DensityMatrix random_state(std::size_t d, StateKind kind, std::mt19937_64& rng);

// Projective: a Haar-random basis split into N nonempty groups (needs N <= d).
// General: S^{-1/2} A_j S^{-1/2} with A_j random positive and S = sum_j A_j.
POVM random_povm(std::size_t d, std::size_t outcomes, PovmKind kind, std::mt19937_64& rng);

// POVM whose first element is (1 - eta) 1, so tr(M_0 omega) = 1 - eta for
// every state; the remaining eta is split by a random N-1 outcome POVM.
POVM near_identity_povm(std::size_t d, std::size_t outcomes, double eta, std::mt19937_64& rng);

}  // namespace equil::quantum
