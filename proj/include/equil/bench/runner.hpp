#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "equil/bench/scenario.hpp"
#include "equil/core/equilibration.hpp"

namespace equil::bench {

enum class BoundStatus { satisfied, violated, not_applicable };

std::string_view to_string(BoundStatus s);
BoundStatus parse_bound_status(std::string_view s);

struct BoundCheck {
    std::optional<double> value;
    BoundStatus status = BoundStatus::not_applicable;

    friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

// Bound keys present in every record.
inline constexpr std::string_view kThm1 = "thm1-threshold";
inline constexpr std::string_view kThm2 = "thm2-threshold";
inline constexpr std::string_view kThm3 = "thm3-bound";
inline constexpr std::string_view kThm5 = "thm5-bound";

struct RunRecord {
    std::string scenario;
    nlohmann::json parameters = nlohmann::json::object();
    EquilibrationReport report;
    std::size_t outcomes = 0;
    std::optional<double> d_eff;
    std::optional<std::size_t> gap_degeneracy;
    std::map<std::string, BoundCheck> bounds;
    std::map<std::string, double> diagnostics;
    double wall_time_seconds = 0.0;
    std::uint64_t seed = 0;
    // Set when the point failed to run; the sweep continues past it.
    std::optional<std::string> error;

    bool any_violation() const;
};

bool operator==(const RunRecord& a, const RunRecord& b);

// Runs every sweep point (in parallel), returning records in sweep order.
std::vector<RunRecord> run_scenario(const Scenario& s, unsigned threads = 0);

RunRecord run_point(const SweepPoint& point, const std::string& scenario_name);

// 0 = every bound respected, 2 = some bound violated, 1 = some run failed.
int exit_code(const std::vector<RunRecord>& records);

}  // namespace equil::bench
