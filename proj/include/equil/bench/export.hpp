#pragma once

#include <cstddef>
#include <iosfwd>

#include "equil/bench/scenario.hpp"

namespace equil::bench {

// Gap table of a quantum scenario's Hamiltonian, with class annotations.
void export_spectrum(const Scenario& s, std::ostream& os);

// Orbit dump (step, coordinates, cell) of a classical-pure scenario.
void export_orbit(const Scenario& s, std::size_t steps, std::ostream& os);

}  // namespace equil::bench
