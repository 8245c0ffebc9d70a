#include "equil/bench/scenario.hpp"

#include <cmath>
#include <fstream>

#include "build.hpp"
#include "equil/errors.hpp"
#include "json_access.hpp"

namespace equil::bench {

using detail::Node;
using nlohmann::json;

std::string_view to_string(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::quantum:
        return "quantum";
    case ScenarioKind::classical_pure:
        return "classical-pure";
    case ScenarioKind::classical_ensemble:
        return "classical-ensemble";
    case ScenarioKind::synthetic_probe:
        return "synthetic-probe";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view s) {
    for (auto k : {ScenarioKind::quantum, ScenarioKind::classical_pure,
                   ScenarioKind::classical_ensemble, ScenarioKind::synthetic_probe})
        if (to_string(k) == s)
            return k;
    throw ConfigError("/kind", "unknown scenario kind '" + std::string(s) + "'");
}

Scenario parse_scenario(const json& j, const std::filesystem::path& base_dir) {
    const Node root(j, "");
    root.require_keys(
        {"name", "kind", "epsilon", "average", "system", "measurement", "sweep", "gap_tolerance"});
    Scenario s;
    s.base_dir = base_dir;
    s.name = root.at("name").string();
    s.kind = parse_scenario_kind(root.at("kind").string());
    s.epsilon = root.at("epsilon").number();
    if (!(s.epsilon > 0.0 && s.epsilon <= 1.0))
        root.at("epsilon").fail("epsilon must lie in (0, 1]");

    if (root.has("average")) {
        const Node avg = root.at("average");
        avg.require_keys({"horizon", "samples", "scheme", "seed"});
        if (avg.has("horizon")) {
            s.horizon = avg.at("horizon").number();
            if (!(std::isfinite(*s.horizon) && *s.horizon > 0.0))
                avg.at("horizon").fail("horizon must be finite and positive");
        }
        s.samples = avg.count_or("samples", s.samples);
        if (s.samples < 2)
            avg.at("samples").fail("need at least two samples");
        if (avg.has("scheme")) {
            try {
                s.scheme = parse_sampling_scheme(avg.at("scheme").string());
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                avg.at("scheme").fail(e.what());
            }
        }
        if (avg.has("seed"))
            s.seed = avg.at("seed").u64();
    }
    if (root.has("gap_tolerance")) {
        s.gap_tolerance = root.at("gap_tolerance").number();
        if (!(*s.gap_tolerance >= 0.0))
            root.at("gap_tolerance").fail("gap tolerance must be nonnegative");
    }
    const Node sys = root.at("system");
    sys.require_object();
    s.system = sys.json();
    if (root.has("measurement")) {
        root.at("measurement").require_object();
        s.measurement = root.at("measurement").json();
    }
    if (root.has("sweep")) {
        const Node sw = root.at("sweep");
        sw.require_object();
        for (const auto& [key, values] : sw.json().items())
            sw.at(key).require_array();
        s.sweep = sw.json();
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open scenario file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_scenario(j, path.has_parent_path() ? path.parent_path() : ".");
}

json to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["kind"] = std::string(to_string(s.kind));
    j["epsilon"] = s.epsilon;
    json avg;
    if (s.horizon)
        avg["horizon"] = *s.horizon;
    avg["samples"] = s.samples;
    avg["scheme"] = std::string(to_string(s.scheme));
    avg["seed"] = s.seed;
    j["average"] = avg;
    if (s.gap_tolerance)
        j["gap_tolerance"] = *s.gap_tolerance;
    j["system"] = s.system;
    j["measurement"] = s.measurement;
    if (s.sweep)
        j["sweep"] = *s.sweep;
    return j;
}

void apply_overrides(Scenario& s, const Overrides& o) {
    if (o.seed)
        s.seed = *o.seed;
    if (o.horizon) {
        if (!(std::isfinite(*o.horizon) && *o.horizon > 0.0))
            throw ConfigError("--horizon", "horizon must be finite and positive");
        s.horizon = *o.horizon;
    }
    if (o.samples) {
        if (*o.samples < 2)
            throw ConfigError("--samples", "need at least two samples");
        s.samples = *o.samples;
    }
    if (o.gap_tolerance) {
        if (!(*o.gap_tolerance >= 0.0))
            throw ConfigError("--gap-tol", "gap tolerance must be nonnegative");
        s.gap_tolerance = *o.gap_tolerance;
    }
}

namespace {

// Location in the scenario JSON that a sweep parameter overrides.
json::json_pointer sweep_target(const json& doc, const std::string& param) {
    const std::string where = "/sweep/" + param;
    auto need = [&](const char* pointer) {
        const json::json_pointer p(pointer);
        if (!doc.contains(p.parent_pointer()))
            throw ConfigError(where, std::string("parameter needs ") + p.parent_pointer().to_string() +
                                         " in the scenario");
        return p;
    };
    if (param == "seed")
        return json::json_pointer("/average/seed");
    if (param == "epsilon")
        return json::json_pointer("/epsilon");
    if (param == "dimension")
        return need("/system/random/dimension");
    if (param == "spectrum")
        return need("/system/random/spectrum");
    if (param == "state")
        return need("/system/random/state");
    if (param == "povm")
        return need("/measurement/random/kind");
    if (param == "delta")
        return need("/system/ensemble/contamination");
    if (param == "ensemble_size")
        return need("/system/ensemble/size");
    if (param == "outcomes") {
        for (const char* p : {"/measurement/random/outcomes", "/measurement/near_identity/outcomes",
                              "/measurement/random_boxes/cells", "/system/recipe/outcomes"})
            if (doc.contains(json::json_pointer(p).parent_pointer()))
                return json::json_pointer(p);
        throw ConfigError(where, "no generated measurement to vary the outcome count of");
    }
    throw ConfigError(where, "unknown sweep parameter");
}

}  // namespace

std::vector<SweepPoint> expand_sweep(const Scenario& s) {
    json base = to_json(s);
    base.erase("sweep");
    if (!s.sweep)
        return {SweepPoint{0, json::object(), s}};

    std::vector<std::pair<std::string, json>> axes;
    std::size_t total = 1;
    for (const auto& [key, values] : s.sweep->items()) {
        if (!values.is_array())
            throw ConfigError("/sweep/" + key, "expected an array");
        sweep_target(base, key);
        axes.emplace_back(key, values);
        total *= values.size();
    }

    std::vector<SweepPoint> points;
    points.reserve(total);
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        json doc = base;
        json params = json::object();
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const json& v = axes[a].second[idx[a]];
            doc[sweep_target(base, axes[a].first)] = v;
            params[axes[a].first] = v;
        }
        Scenario resolved;
        try {
            resolved = parse_scenario(doc, s.base_dir);
        } catch (const ConfigError& e) {
            const std::string msg = std::string(e.what()).substr(e.path().size() + 2);
            throw ConfigError(e.path(), msg + " (sweep point " + params.dump() + ")");
        }
        points.push_back(SweepPoint{n, std::move(params), std::move(resolved)});
        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < axes[a].second.size())
                break;
            idx[a] = 0;
        }
    }
    return points;
}

void validate(const Scenario& s) {
    for (const auto& point : expand_sweep(s)) {
        const auto instance = detail::build_instance(point.resolved);
        try {
            detail::average_config(point.resolved, instance).validate();
        } catch (const DomainError& e) {
            throw ConfigError("/average", e.what());
        }
    }
}

}  // namespace equil::bench
