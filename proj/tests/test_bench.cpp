#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "equil/bench.hpp"
#include "equil/errors.hpp"

using namespace equil;
using namespace equil::bench;
using nlohmann::json;

namespace {

const char* kQubit = R"({
  "name": "qubit", "kind": "quantum", "epsilon": 0.35,
  "average": {"samples": 10000, "seed": 1},
  "system": {"hamiltonian": {"eigenvalues": [0, 1]},
             "state": {"vector": [[0.7071067811865476, 0], [0.7071067811865476, 0]]}},
  "measurement": {"povm": [[[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]],
                           [[[0.5, 0], [-0.5, 0]], [[-0.5, 0], [0.5, 0]]]]}
})";

const char* kRandomQuantum = R"({
  "name": "rq", "kind": "quantum", "epsilon": 0.2,
  "average": {"samples": 500, "seed": 4},
  "system": {"random": {"dimension": 4, "spectrum": "uniform", "state": "pure"}},
  "measurement": {"random": {"outcomes": 2, "kind": "general"}}
})";

Scenario scenario(const char* text) { return parse_scenario(json::parse(text)); }

// Path reported by the ConfigError thrown for `j`, or "" if none is thrown.
std::string error_path(const json& j) {
    try {
        validate(parse_scenario(j));
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "";
}

std::string csv_of(const std::vector<RunRecord>& records) {
    std::ostringstream os;
    write_csv(os, records);
    return os.str();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("scenario parsing round-trips") {
    const auto s = scenario(kQubit);
    CHECK(s.name == "qubit");
    CHECK(s.kind == ScenarioKind::quantum);
    CHECK(s.samples == 10000);
    CHECK_FALSE(s.horizon.has_value());
    const auto again = parse_scenario(to_json(s));
    CHECK(to_json(again) == to_json(s));
    CHECK(parse_scenario_kind("classical-ensemble") == ScenarioKind::classical_ensemble);
    CHECK(to_string(ScenarioKind::synthetic_probe) == "synthetic-probe");
}

TEST_CASE("invalid scenarios name the offending field") {
    const json base = json::parse(kRandomQuantum);
    CHECK(error_path(base) == "");

    auto j = base;
    j.erase("epsilon");
    CHECK(error_path(j) == "/epsilon");
    j = base;
    j["epsilon"] = 1.5;
    CHECK(error_path(j) == "/epsilon");
    j = base;
    j["colour"] = "red";
    CHECK(error_path(j) == "/colour");
    j = base;
    j["kind"] = "relativistic";
    CHECK(error_path(j) == "/kind");
    j = base;
    j["system"]["random"]["dimension"] = 0;
    CHECK(error_path(j) == "/system/random/dimension");
    j = base;
    j["measurement"]["random"] = {{"outcomes", 5}, {"kind", "projective"}};
    CHECK(error_path(j) == "/measurement/random/outcomes");
    j = base;
    j["average"]["samples"] = 1;
    CHECK(error_path(j) == "/average/samples");
    j = base;
    j["average"]["scheme"] = "sobol";
    CHECK(error_path(j) == "/average/scheme");
    j = base;
    j["sweep"] = {{"temperature", {1, 2}}};
    CHECK(error_path(j) == "/sweep/temperature");
    j = base;
    j["sweep"] = {{"dimension", {2, -3}}};
    CHECK(error_path(j) == "/system/random/dimension");

    json q = json::parse(kQubit);
    q["measurement"]["povm"][1] = json::parse("[[[0.5,0],[0,0],[0,0]],[[0,0],[0.5,0],[0,0]],[[0,0],[0,0],[0.5,0]]]");
    CHECK(error_path(q) == "/measurement/povm/1");
    q = json::parse(kQubit);
    q["measurement"]["povm"][1][0][0] = json::array({0.9, 0});
    CHECK(error_path(q) == "/measurement/povm");
    q = json::parse(kQubit);
    q["system"]["state"]["vector"] = json::array({1, 0, 0});
    CHECK(error_path(q) == "/system/state");

    json c = json::parse(R"({"name": "c", "kind": "classical-pure", "epsilon": 0.2,
        "system": {"map": {"type": "rotation", "alpha": [0.1, 0.2]}, "point": [0.1]},
        "measurement": {"random_boxes": {"cells": 2}}})");
    CHECK(error_path(c) == "/system/point");
    c["system"]["point"] = json::array({0.1, 0.3});
    c["measurement"] = json::parse(R"({"partition": {"cuts": [[0.5]], "labels": [0, 1]}})");
    CHECK(error_path(c) == "/measurement/partition/cuts");
    c["measurement"] = json::parse(R"({"partition": {"cuts": [[0.5], [0.5]], "labels": [0, 1, 3, 3]}})");
    CHECK(error_path(c) == "/measurement/partition");
    c["system"]["map"] = json::parse(R"({"type": "cat"})");
    c["average"] = json::parse(R"({"horizon": 2e6})");
    c["measurement"] = json::parse(R"({"random_boxes": {"cells": 2}})");
    CHECK(error_path(c) == "/average/horizon");
}

TEST_CASE("inline matrices are limited in size, larger ones come from files") {
    const auto dir = std::filesystem::temp_directory_path() / "equil_bench_test";
    std::filesystem::create_directories(dir);
    json big = json::array();
    for (int i = 0; i < 33; ++i) {
        json row = json::array();
        for (int k = 0; k < 33; ++k)
            row.push_back(i == k ? 1.0 / 33 : 0.0);
        big.push_back(row);
    }
    json s = json::parse(R"({"name": "big", "kind": "quantum", "epsilon": 0.2,
        "average": {"samples": 100},
        "system": {"hamiltonian": {}, "state": {}},
        "measurement": {"random": {"outcomes": 2}}})");
    std::vector<double> levels(33);
    for (int i = 0; i < 33; ++i)
        levels[static_cast<std::size_t>(i)] = i * i;
    s["system"]["hamiltonian"]["eigenvalues"] = levels;
    s["system"]["state"]["matrix"] = big;
    CHECK(error_path(s) == "/system/state/matrix");

    std::ofstream(dir / "rho.json") << big.dump();
    s["system"]["state"]["matrix"] = {{"file", "rho.json"}};
    CHECK_NOTHROW(validate(parse_scenario(s, dir)));
    s["system"]["state"]["matrix"] = {{"file", "missing.json"}};
    CHECK_THROWS_AS(validate(parse_scenario(s, dir)), ConfigError);
}

TEST_CASE("qubit scenario record") {
    const auto records = run_scenario(scenario(kQubit));
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK_FALSE(r.error.has_value());
    CHECK(std::abs(r.report.mean_distinguishability - 1 / std::numbers::pi) < 0.01);
    REQUIRE(r.bounds.at(std::string(kThm5)).value.has_value());
    CHECK(*r.bounds.at(std::string(kThm5)).value == doctest::Approx(std::sqrt(0.5) / 2).epsilon(1e-12));
    CHECK(r.bounds.at(std::string(kThm5)).status == BoundStatus::satisfied);
    CHECK(*r.d_eff == doctest::Approx(2.0));
    CHECK(*r.gap_degeneracy == 1);
    CHECK(r.report.verdict == classify(r.report.mean_distinguishability, r.report.standard_error, 0.35));
    CHECK(exit_code(records) == 0);
}

TEST_CASE("rotation with a single cell never moves") {
    const auto s = scenario(R"({"name": "one-cell", "kind": "classical-pure", "epsilon": 0.1,
        "average": {"horizon": 1000, "samples": 1000},
        "system": {"map": {"type": "rotation", "alpha": 0.37}, "point": [0.2]},
        "measurement": {"partition": {"cuts": [[]], "labels": [0]}}})");
    const auto records = run_scenario(s);
    REQUIRE(records.size() == 1);
    CHECK(records[0].report.mean_distinguishability == 0.0);
    CHECK(records[0].bounds.at(std::string(kThm1)).status == BoundStatus::satisfied);
    CHECK(records[0].bounds.at(std::string(kThm2)).status == BoundStatus::satisfied);
    CHECK(records[0].report.verdict == Verdict::equilibrates);
}

TEST_CASE("sweeps") {
    auto j = json::parse(kRandomQuantum);
    j["sweep"] = {{"outcomes", json::array()}};
    CHECK(run_scenario(parse_scenario(j)).empty());

    j["sweep"] = {{"outcomes", {2, 3, 4}}, {"dimension", {4, 6}}};
    const auto s = parse_scenario(j);
    const auto points = expand_sweep(s);
    REQUIRE(points.size() == 6);
    // Keys in name order, last key fastest.
    CHECK(points[0].parameters == json({{"dimension", 4}, {"outcomes", 2}}));
    CHECK(points[1].parameters == json({{"dimension", 4}, {"outcomes", 3}}));
    CHECK(points[3].parameters == json({{"dimension", 6}, {"outcomes", 2}}));
    const auto records = run_scenario(s);
    CHECK(records.size() == 6);
    CHECK(lines(csv_of(records)) == 7);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].parameters == points[i].parameters);
        CHECK(records[i].outcomes == points[i].parameters["outcomes"].get<std::size_t>());
    }
}

TEST_CASE("every record carries every bound with a consistent flag") {
    std::vector<Scenario> all = builtin_suite();
    for (const auto& s : all) {
        for (const auto& r : run_scenario(s)) {
            CHECK_FALSE(r.error.has_value());
            for (auto key : {kThm1, kThm2, kThm3, kThm5})
                CHECK(r.bounds.count(std::string(key)) == 1);
            const auto& thm5 = r.bounds.at(std::string(kThm5));
            if (s.kind == ScenarioKind::quantum) {
                REQUIRE(thm5.value.has_value());
                const bool over = r.report.mean_distinguishability - 3 * r.report.standard_error > *thm5.value;
                CHECK((thm5.status == BoundStatus::violated) == over);
                CHECK_FALSE(over);
            } else {
                CHECK(thm5.status == BoundStatus::not_applicable);
            }
            CHECK_FALSE(r.any_violation());
        }
    }
}

TEST_CASE("runs are deterministic and independent of thread count") {
    auto j = json::parse(kRandomQuantum);
    j["sweep"] = {{"seed", {1, 2, 3, 4, 5}}, {"state", {"pure", "mixed"}}};
    const auto s = parse_scenario(j);
    const auto a = csv_of(run_scenario(s, 1));
    const auto b = csv_of(run_scenario(s, 4));
    const auto c = csv_of(run_scenario(s, 3));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("overrides") {
    auto s = scenario(kRandomQuantum);
    apply_overrides(s, Overrides{42, 100.0, 64, 1e-6});
    CHECK(s.seed == 42);
    CHECK(*s.horizon == 100.0);
    CHECK(s.samples == 64);
    CHECK(*s.gap_tolerance == 1e-6);
    CHECK_THROWS_AS(apply_overrides(s, Overrides{std::nullopt, -1.0, std::nullopt, std::nullopt}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(s, Overrides{std::nullopt, std::nullopt, 1, std::nullopt}), ConfigError);
}

TEST_CASE("reports") {
    auto j = json::parse(kRandomQuantum);
    const auto one = run_scenario(parse_scenario(j));
    const auto csv = csv_of(one);
    CHECK(lines(csv) == 2);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);

    j["sweep"] = {{"outcomes", {2, 3}}, {"state", {"pure", "mixed"}}};
    const auto records = run_scenario(parse_scenario(j));
    std::ostringstream os;
    write_json(os, records);
    const auto back = records_from_json(json::parse(os.str()));
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(back[i] == records[i]);

    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK_THROWS_AS(parse_report_format("xml"), ConfigError);
    CHECK_THROWS_AS(emit_report(records, ReportFormat::csv, std::filesystem::path("/nonexistent-dir/out.csv")), IoError);
}

TEST_CASE("run errors are recorded and the sweep continues") {
    auto s = scenario(kRandomQuantum);
    SweepPoint good{0, json::object(), s};
    SweepPoint bad = good;
    bad.resolved.system["random"]["dimension"] = 0;
    const auto failed = run_point(bad, "x");
    REQUIRE(failed.error.has_value());
    for (const auto& [key, b] : failed.bounds)
        CHECK(b.status == BoundStatus::not_applicable);
    const auto ok = run_point(good, "x");
    CHECK_FALSE(ok.error.has_value());

    CHECK(exit_code({ok}) == 0);
    CHECK(exit_code({ok, failed}) == 1);
    auto violated = ok;
    violated.bounds[std::string(kThm5)].status = BoundStatus::violated;
    CHECK(exit_code({ok, violated}) == 2);
    CHECK(exit_code({violated, failed}) == 1);

    const auto csv = csv_of({failed});
    CHECK(csv.find(",error,") != std::string::npos);
}

TEST_CASE("shipped scenarios validate") {
    const std::filesystem::path dir = EQUIL_SCENARIO_DIR;
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json")
            continue;
        INFO(entry.path().string());
        CHECK_NOTHROW(validate(load_scenario(entry.path())));
        ++count;
    }
    CHECK(count >= 5);
    CHECK_THROWS_AS(load_scenario(dir / "does-not-exist.json"), IoError);
}

TEST_CASE("exports") {
    std::ostringstream spectrum;
    export_spectrum(scenario(kQubit), spectrum);
    CHECK(lines(spectrum.str()) == 3);
    CHECK_THROWS_AS(export_orbit(scenario(kQubit), 10, spectrum), ConfigError);
}
