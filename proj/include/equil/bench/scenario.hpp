#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "equil/core/time_average.hpp"

namespace equil::bench {

enum class ScenarioKind { quantum, classical_pure, classical_ensemble, synthetic_probe };

std::string_view to_string(ScenarioKind k);
ScenarioKind parse_scenario_kind(std::string_view s);

// One scenario file. `system` and `measurement` keep their JSON form because
// sweep parameters are applied as overrides before a point is built; every
// point is built once by validate() so inconsistent files fail before any run.
//
// File layout (keys not listed are rejected):
//   name, kind, epsilon, average{horizon, samples, scheme, seed},
//   system{...}, measurement{...}, sweep{param: [values...]}, gap_tolerance
struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::quantum;
    double epsilon = 0.1;
    // Horizon unset means: quantum -> 10^3 * 2 pi / smallest gap,
    // classical -> one sample per map step, synthetic -> 10^3.
    std::optional<double> horizon;
    std::size_t samples = 10000;
    SamplingScheme scheme = SamplingScheme::stratified_random;
    std::uint64_t seed = 0;
    // Absolute gap tolerance; unset means 1e-9 times the spectral range.
    std::optional<double> gap_tolerance;
    nlohmann::json system = nlohmann::json::object();
    nlohmann::json measurement = nlohmann::json::object();
    // Parameter name -> list of values. Absent: a single run. Present with an
    // empty list: no runs.
    std::optional<nlohmann::json> sweep;
    std::filesystem::path base_dir = ".";
};

Scenario parse_scenario(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
Scenario load_scenario(const std::filesystem::path& path);
nlohmann::json to_json(const Scenario& s);

// Command-line overrides (--seed, --horizon, --samples, --gap-tol).
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> horizon;
    std::optional<std::size_t> samples;
    std::optional<double> gap_tolerance;
};

void apply_overrides(Scenario& s, const Overrides& o);

// A fully resolved run: the scenario with one sweep point's values applied.
struct SweepPoint {
    std::size_t index = 0;
    nlohmann::json parameters = nlohmann::json::object();
    Scenario resolved;
};

// Parameters recognised in `sweep`: seed, epsilon, dimension, outcomes,
// spectrum, state, povm, delta, ensemble_size. Points enumerate the Cartesian
// product in key order, last key fastest.
std::vector<SweepPoint> expand_sweep(const Scenario& s);

// Throws ConfigError (with the offending field path) unless every sweep point
// describes a consistent system.
void validate(const Scenario& s);

}  // namespace equil::bench
