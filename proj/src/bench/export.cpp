#include "equil/bench/export.hpp"

#include "build.hpp"
#include "equil/errors.hpp"

namespace equil::bench {

void export_spectrum(const Scenario& s, std::ostream& os) {
    if (s.kind != ScenarioKind::quantum)
        throw ConfigError("/kind", "spectrum export needs a quantum scenario");
    const auto instance = detail::build_instance(s);
    const auto& h = std::get<detail::QuantumInstance>(instance).hamiltonian;
    quantum::write_spectrum_csv(os, h, s.gap_tolerance.value_or(quantum::default_gap_tolerance(h)));
}

void export_orbit(const Scenario& s, std::size_t steps, std::ostream& os) {
    if (s.kind != ScenarioKind::classical_pure)
        throw ConfigError("/kind", "orbit export needs a classical-pure scenario");
    const auto instance = detail::build_instance(s);
    const auto& c = std::get<detail::ClassicalPureInstance>(instance);
    classical::write_orbit_csv(os, c.point, c.map, c.partition, steps);
}

}  // namespace equil::bench
