// equil: run equilibration scenarios and check the bounds they must satisfy.
//
// Exit status: 0 when every bound holds, 2 when some bound is violated beyond
// statistical tolerance, 1 on configuration, I/O or run errors.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "equil/bench.hpp"
#include "equil/classical/dynamics.hpp"
#include "equil/errors.hpp"
#include "equil/quantum/dynamics.hpp"

namespace {

using namespace equil;
using namespace equil::bench;

struct OutputOptions {
    std::string out;
    std::string format = "csv";
    unsigned threads = 0;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--seed", o.seed, "Override the scenario seed");
    cmd->add_option("--horizon", o.horizon, "Override the time-average horizon");
    cmd->add_option("--samples", o.samples, "Override the number of time samples");
    cmd->add_option("--gap-tol", o.gap_tolerance, "Absolute gap-equality tolerance");
}

void add_output(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--out", o.out, "Output file (default: standard output)");
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

void emit(const std::vector<RunRecord>& records, const OutputOptions& o) {
    const auto format = parse_report_format(o.format);
    if (o.out.empty())
        emit_report(records, format, std::cout);
    else
        emit_report(records, format, std::filesystem::path(o.out));
}

void summarize(const std::vector<RunRecord>& records) {
    for (const auto& r : records) {
        if (r.error) {
            std::cerr << r.scenario << " " << r.parameters.dump() << ": error: " << *r.error << '\n';
            continue;
        }
        for (const auto& [key, b] : r.bounds)
            if (b.status == BoundStatus::violated)
                std::cerr << r.scenario << " " << r.parameters.dump() << ": " << key
                          << " violated (mean_D " << r.report.mean_distinguishability << ", stderr "
                          << r.report.standard_error << ")\n";
    }
}

int run_file(const std::string& path, const Overrides& ov, const OutputOptions& out, bool sweep) {
    Scenario s = load_scenario(path);
    apply_overrides(s, ov);
    if (!sweep)
        s.sweep.reset();
    validate(s);
    const auto records = run_scenario(s, out.threads);
    emit(records, out);
    summarize(records);
    return exit_code(records);
}

int verify(const Overrides& ov, const OutputOptions& out) {
    std::vector<RunRecord> all;
    for (auto s : builtin_suite()) {
        apply_overrides(s, ov);
        validate(s);
        auto records = run_scenario(s, out.threads);
        std::size_t violated = 0;
        std::size_t failed = 0;
        for (const auto& r : records) {
            violated += r.any_violation() ? 1 : 0;
            failed += r.error ? 1 : 0;
        }
        std::cerr << std::left << std::setw(20) << s.name << " runs " << records.size()
                  << "  violations " << violated << "  errors " << failed << '\n';
        all.insert(all.end(), records.begin(), records.end());
    }
    emit(all, out);
    summarize(all);
    return exit_code(all);
}

struct BoundsOptions {
    std::size_t outcomes = 2;
    double d_eff = 1.0;
    std::size_t gap_degeneracy = 1;
    double epsilon = 0.1;
    std::optional<double> delta;
};

int bounds(const BoundsOptions& b) {
    std::cout << std::setprecision(10);
    std::cout << "thm5-bound " << quantum::quantum_bound(b.outcomes, b.gap_degeneracy, b.d_eff)
              << '\n';
    std::cout << "thm5-bound-without-shift "
              << quantum::quantum_bound_without_identity_shift(b.outcomes, b.gap_degeneracy, b.d_eff)
              << '\n';
    std::cout << "max-outcomes "
              << quantum::max_outcomes_for_equilibration(b.epsilon, b.d_eff, b.gap_degeneracy) << '\n';
    std::cout << "thm1-threshold " << 1.0 - b.epsilon / 2.0 << '\n';
    std::cout << "thm2-threshold " << 1.0 - b.epsilon << '\n';
    if (b.delta)
        std::cout << "thm3-bound " << classical::mixed_equilibration_bound(b.outcomes, *b.delta)
                  << '\n';
    return 0;
}

int export_to(const std::string& out, const std::function<void(std::ostream&)>& write) {
    if (out.empty()) {
        write(std::cout);
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + out + " for writing");
    write(f);
    if (!f)
        throw IoError("failed writing " + out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks of equilibration bounds for classical and quantum dynamics"};
    app.require_subcommand(1);

    Overrides ov;
    OutputOptions out;
    std::string config;

    auto* run = app.add_subcommand("run", "Run a scenario once (sweep ignored)");
    run->add_option("config", config, "Scenario file")->required();
    add_overrides(run, ov);
    add_output(run, out);

    auto* sweep = app.add_subcommand("sweep", "Run every point of a scenario's sweep grid");
    sweep->add_option("config", config, "Scenario file")->required();
    add_overrides(sweep, ov);
    add_output(sweep, out);

    auto* ver = app.add_subcommand("verify", "Run the built-in scenario suite");
    add_overrides(ver, ov);
    add_output(ver, out);

    BoundsOptions bo;
    auto* bnd = app.add_subcommand("bounds", "Print bound values without simulating");
    bnd->add_option("-N,--outcomes", bo.outcomes, "Number of outcomes")->check(CLI::PositiveNumber);
    bnd->add_option("--d-eff", bo.d_eff, "Effective dimension")->check(CLI::Range(1.0, 1e300));
    bnd->add_option("--gap-degeneracy", bo.gap_degeneracy, "Maximal gap degeneracy D_G")
        ->check(CLI::PositiveNumber);
    bnd->add_option("--epsilon", bo.epsilon, "Tolerance epsilon")->check(CLI::Range(0.0, 1.0));
    bnd->add_option("--delta", bo.delta, "Non-chaotic weight of a classical mixture")
        ->check(CLI::Range(0.0, 0.5));

    std::size_t steps = 100;
    auto* spec = app.add_subcommand("export-spectrum", "Write a quantum scenario's gap table as CSV");
    spec->add_option("config", config, "Scenario file")->required();
    spec->add_option("--gap-tol", ov.gap_tolerance, "Absolute gap-equality tolerance");
    spec->add_option("--seed", ov.seed, "Override the scenario seed");
    spec->add_option("--out", out.out, "Output file (default: standard output)");

    auto* orb = app.add_subcommand("export-orbit", "Write a classical-pure orbit as CSV");
    orb->add_option("config", config, "Scenario file")->required();
    orb->add_option("--steps", steps, "Number of map steps")->check(CLI::PositiveNumber);
    orb->add_option("--seed", ov.seed, "Override the scenario seed");
    orb->add_option("--out", out.out, "Output file (default: standard output)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run)
            return run_file(config, ov, out, false);
        if (*sweep)
            return run_file(config, ov, out, true);
        if (*ver)
            return verify(ov, out);
        if (*bnd)
            return bounds(bo);
        if (*spec || *orb) {
            Scenario s = load_scenario(config);
            apply_overrides(s, ov);
            if (*spec)
                return export_to(out.out, [&](std::ostream& os) { export_spectrum(s, os); });
            return export_to(out.out, [&](std::ostream& os) { export_orbit(s, steps, os); });
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
