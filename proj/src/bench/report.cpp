#include "equil/bench/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "equil/errors.hpp"

namespace equil::bench {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view s) {
    if (s == "csv")
        return ReportFormat::csv;
    if (s == "json")
        return ReportFormat::json;
    throw ConfigError("--format", "expected csv or json, got '" + std::string(s) + "'");
}

namespace {

std::string csv_number(std::optional<double> v) {
    if (!v)
        return "NA";
    std::ostringstream os;
    os << std::setprecision(17) << *v;
    return os.str();
}

// Quotes a field if it contains a delimiter, quote or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

const BoundCheck& bound(const RunRecord& r, std::string_view key) {
    static const BoundCheck missing;
    const auto it = r.bounds.find(std::string(key));
    return it == r.bounds.end() ? missing : it->second;
}

// Bound columns hold the value when the bound applies, NA otherwise.
std::optional<double> applicable_value(const BoundCheck& b) {
    return b.status == BoundStatus::not_applicable ? std::nullopt : b.value;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        const bool ok = !r.error;
        os << csv_field(r.scenario) << ',' << (ok ? std::to_string(r.outcomes) : "NA") << ','
           << csv_number(r.d_eff) << ','
           << (r.gap_degeneracy ? std::to_string(*r.gap_degeneracy) : "NA") << ','
           << csv_number(r.report.epsilon) << ','
           << csv_number(ok ? std::optional(r.report.mean_distinguishability) : std::nullopt) << ','
           << csv_number(ok ? std::optional(r.report.standard_error) : std::nullopt) << ','
           << csv_number(applicable_value(bound(r, kThm5))) << ','
           << csv_number(applicable_value(bound(r, kThm3))) << ','
           << to_string(bound(r, kThm1).status) << ',' << to_string(bound(r, kThm2).status) << ','
           << (ok ? std::string(to_string(r.report.verdict)) : "error") << ',' << r.seed << '\n';
    }
}

json to_json(const RunRecord& r) {
    json j;
    j["scenario"] = r.scenario;
    j["parameters"] = r.parameters;
    j["outcomes"] = r.outcomes;
    j["d_eff"] = r.d_eff ? json(*r.d_eff) : json(nullptr);
    j["D_G"] = r.gap_degeneracy ? json(*r.gap_degeneracy) : json(nullptr);
    j["epsilon"] = r.report.epsilon;
    j["mean_D"] = r.report.mean_distinguishability;
    j["stderr"] = r.report.standard_error;
    const auto probs = r.report.equilibrium_distribution.probs();
    j["omega"] = std::vector<double>(probs.begin(), probs.end());
    j["verdict"] = std::string(to_string(r.report.verdict));
    j["bound_values"] = r.report.bound_values;
    json bounds = json::object();
    for (const auto& [key, b] : r.bounds)
        bounds[key] = {{"value", b.value ? json(*b.value) : json(nullptr)},
                       {"status", std::string(to_string(b.status))}};
    j["bounds"] = bounds;
    j["diagnostics"] = r.diagnostics;
    j["wall_time_seconds"] = r.wall_time_seconds;
    j["seed"] = r.seed;
    j["error"] = r.error ? json(*r.error) : json(nullptr);
    return j;
}

RunRecord record_from_json(const json& j) {
    try {
        RunRecord r;
        r.scenario = j.at("scenario").get<std::string>();
        r.parameters = j.at("parameters");
        r.outcomes = j.at("outcomes").get<std::size_t>();
        if (!j.at("d_eff").is_null())
            r.d_eff = j.at("d_eff").get<double>();
        if (!j.at("D_G").is_null())
            r.gap_degeneracy = j.at("D_G").get<std::size_t>();
        r.report.epsilon = j.at("epsilon").get<double>();
        r.report.mean_distinguishability = j.at("mean_D").get<double>();
        r.report.standard_error = j.at("stderr").get<double>();
        r.report.equilibrium_distribution =
            OutcomeDistribution(j.at("omega").get<std::vector<double>>());
        r.report.verdict = parse_verdict(j.at("verdict").get<std::string>());
        r.report.bound_values = j.at("bound_values").get<std::map<std::string, double>>();
        for (const auto& [key, b] : j.at("bounds").items()) {
            BoundCheck c;
            if (!b.at("value").is_null())
                c.value = b.at("value").get<double>();
            c.status = parse_bound_status(b.at("status").get<std::string>());
            r.bounds[key] = c;
        }
        r.diagnostics = j.at("diagnostics").get<std::map<std::string, double>>();
        r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        if (!j.at("error").is_null())
            r.error = j.at("error").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed run record: ") + e.what());
    }
}

std::vector<RunRecord> records_from_json(const json& j) {
    if (!j.is_array())
        throw DataError("expected a JSON array of run records");
    std::vector<RunRecord> out;
    for (const auto& r : j)
        out.push_back(record_from_json(r));
    return out;
}

void write_json(std::ostream& os, const std::vector<RunRecord>& records) {
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
}

void emit_report(const std::vector<RunRecord>& records, ReportFormat format, std::ostream& os) {
    if (format == ReportFormat::csv)
        write_csv(os, records);
    else
        write_json(os, records);
}

void emit_report(const std::vector<RunRecord>& records, ReportFormat format,
                 const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    emit_report(records, format, out);
    out.flush();
    if (!out)
        throw IoError("failed writing " + path.string());
}

}  // namespace equil::bench
