#include "build.hpp"

#include <cmath>
#include <random>

#include "equil/quantum/dynamics.hpp"
#include "equil/quantum/random.hpp"
#include "json_access.hpp"

namespace equil::bench::detail {

namespace {

// Separate stream for system generation so it does not correlate with the
// time-sampling stream, which uses the seed directly.
std::mt19937_64 system_rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      0x5157u};
    return std::mt19937_64(seq);
}

template <class F>
auto rethrow_as_config(const Node& n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        n.fail(e.what());
    }
}

quantum::HamiltonianSpectrum parse_hamiltonian(const Node& n, double rel_tol,
                                               const std::filesystem::path& base) {
    n.require_keys({"eigenvalues", "eigenvectors", "matrix"});
    if (n.has("matrix")) {
        const auto m = parse_matrix(n.at("matrix"), base);
        return rethrow_as_config(n.at("matrix"),
                                 [&] { return quantum::HamiltonianSpectrum::from_hermitian(m, rel_tol); });
    }
    const Node ev = n.at("eigenvalues");
    ev.require_array();
    quantum::RVector e(static_cast<Eigen::Index>(ev.json().size()));
    for (std::size_t i = 0; i < ev.json().size(); ++i)
        e[static_cast<Eigen::Index>(i)] = ev.at(i).number();
    if (e.size() == 0)
        ev.fail("need at least one eigenvalue");
    quantum::CMatrix vecs = quantum::CMatrix::Identity(e.size(), e.size());
    if (n.has("eigenvectors")) {
        vecs = parse_matrix(n.at("eigenvectors"), base);
        if (vecs.rows() != e.size())
            n.at("eigenvectors").fail("eigenvector matrix dimension does not match eigenvalues");
    }
    return rethrow_as_config(n, [&] {
        return quantum::HamiltonianSpectrum::from_eigensystem(e, vecs, rel_tol);
    });
}

QuantumInstance build_quantum(const Scenario& s) {
    const Node sys(s.system, "/system");
    sys.require_keys({"random", "hamiltonian", "state", "degeneracy_tolerance"});
    const double rel_tol = sys.number_or("degeneracy_tolerance", quantum::kDefaultRelativeTolerance);
    auto rng = system_rng(s.seed);

    std::optional<quantum::HamiltonianSpectrum> h;
    std::optional<quantum::DensityMatrix> rho;
    if (sys.has("random")) {
        if (sys.has("hamiltonian") || sys.has("state"))
            sys.fail("give either 'random' or 'hamiltonian' + 'state'");
        const Node r = sys.at("random");
        r.require_keys({"dimension", "spectrum", "state"});
        const std::size_t d = r.at("dimension").count();
        if (d < 1 || d > 256)
            r.at("dimension").fail("dimension must lie in [1, 256]");
        const auto family = rethrow_as_config(r, [&] {
            return quantum::parse_spectrum_family(r.string_or("spectrum", "uniform"));
        });
        const auto kind =
            rethrow_as_config(r, [&] { return quantum::parse_state_kind(r.string_or("state", "pure")); });
        h = quantum::random_spectrum(d, family, rng);
        rho = quantum::random_state(d, kind, rng);
    } else {
        h = parse_hamiltonian(sys.at("hamiltonian"), rel_tol, s.base_dir);
        const Node st = sys.at("state");
        st.require_keys({"vector", "matrix", "random"});
        if (st.has("vector")) {
            const auto v = parse_vector(st.at("vector"));
            rho = rethrow_as_config(st.at("vector"), [&] { return quantum::DensityMatrix::pure(v); });
        } else if (st.has("matrix")) {
            const auto m = parse_matrix(st.at("matrix"), s.base_dir);
            rho = rethrow_as_config(st.at("matrix"), [&] { return quantum::DensityMatrix(m); });
        } else {
            const auto kind = rethrow_as_config(
                st.at("random"), [&] { return quantum::parse_state_kind(st.at("random").string()); });
            rho = quantum::random_state(h->dimension(), kind, rng);
        }
        if (rho->dimension() != h->dimension())
            st.fail("state dimension does not match the Hamiltonian");
    }

    const Node meas(s.measurement, "/measurement");
    meas.require_keys({"povm", "random", "near_identity"});
    const std::size_t d = h->dimension();
    std::optional<quantum::POVM> povm;
    if (meas.has("povm")) {
        const Node list = meas.at("povm");
        list.require_array();
        std::vector<quantum::CMatrix> elements;
        for (std::size_t j = 0; j < list.json().size(); ++j) {
            elements.push_back(parse_matrix(list.at(j), s.base_dir));
            if (static_cast<std::size_t>(elements.back().rows()) != d)
                list.at(j).fail("POVM element dimension does not match the Hamiltonian");
        }
        povm = rethrow_as_config(list, [&] { return quantum::POVM(elements); });
    } else if (meas.has("random")) {
        const Node r = meas.at("random");
        r.require_keys({"outcomes", "kind"});
        const std::size_t n = r.at("outcomes").count();
        const auto kind =
            rethrow_as_config(r, [&] { return quantum::parse_povm_kind(r.string_or("kind", "projective")); });
        if (n < 1)
            r.at("outcomes").fail("need at least one outcome");
        if (kind == quantum::PovmKind::projective && n > d)
            r.at("outcomes").fail("projective measurement cannot have more outcomes than the dimension");
        povm = quantum::random_povm(d, n, kind, rng);
    } else if (meas.has("near_identity")) {
        const Node r = meas.at("near_identity");
        r.require_keys({"outcomes", "eta"});
        const std::size_t n = r.at("outcomes").count();
        const double eta = r.at("eta").number();
        if (n < 2)
            r.at("outcomes").fail("need at least two outcomes");
        if (!(eta >= 0.0 && eta <= 1.0))
            r.at("eta").fail("eta must lie in [0, 1]");
        povm = quantum::near_identity_povm(d, n, eta, rng);
    } else {
        meas.fail("expected one of 'povm', 'random', 'near_identity'");
    }
    return QuantumInstance{std::move(*h), std::move(*rho), std::move(*povm)};
}

classical::MapSpec parse_map(const Node& n) {
    n.require_object();
    const std::string type = n.at("type").string();
    classical::MapSpec spec;
    if (type == "rotation") {
        n.require_keys({"type", "alpha"});
        spec.kind = classical::MapKind::rotation;
        const Node a = n.at("alpha");
        if (a.json().is_number()) {
            spec.rotation = {a.number()};
        } else {
            a.require_array();
            for (std::size_t i = 0; i < a.json().size(); ++i)
                spec.rotation.push_back(a.at(i).number());
        }
        if (spec.rotation.empty())
            a.fail("rotation needs at least one angle");
    } else if (type == "cat") {
        n.require_keys({"type", "arithmetic"});
        spec.kind = classical::MapKind::cat_map;
        const std::string arith = n.string_or("arithmetic", "floating");
        if (arith == "floating")
            spec.arithmetic = classical::CatArithmetic::floating;
        else if (arith == "exact")
            spec.arithmetic = classical::CatArithmetic::exact_dyadic;
        else
            n.at("arithmetic").fail("expected 'floating' or 'exact'");
    } else if (type == "baker") {
        n.require_keys({"type"});
        spec.kind = classical::MapKind::baker_map;
    } else if (type == "composed") {
        n.require_keys({"type", "maps"});
        spec.kind = classical::MapKind::composed;
        const Node parts = n.at("maps");
        parts.require_array();
        for (std::size_t i = 0; i < parts.json().size(); ++i)
            spec.parts.push_back(parse_map(parts.at(i)));
        if (spec.parts.empty())
            parts.fail("composed map needs at least one part");
    } else {
        n.at("type").fail("unknown map type '" + type + "'");
    }
    return spec;
}

classical::Partition parse_partition(const Node& meas, std::size_t dim, std::mt19937_64& rng) {
    meas.require_keys({"partition", "random_boxes"});
    if (meas.has("random_boxes")) {
        const Node r = meas.at("random_boxes");
        r.require_keys({"cells"});
        const std::size_t cells = r.at("cells").count();
        if (cells < 1)
            r.at("cells").fail("need at least one cell");
        return classical::random_box_partition(dim, cells, rng);
    }
    const Node p = meas.at("partition");
    p.require_keys({"cuts", "labels"});
    const Node cuts = p.at("cuts");
    cuts.require_array();
    std::vector<std::vector<double>> axes;
    for (std::size_t a = 0; a < cuts.json().size(); ++a) {
        const Node axis = cuts.at(a);
        axis.require_array();
        std::vector<double> c;
        for (std::size_t i = 0; i < axis.json().size(); ++i)
            c.push_back(axis.at(i).number());
        axes.push_back(std::move(c));
    }
    if (axes.size() != dim)
        cuts.fail("partition has " + std::to_string(axes.size()) + " axes, map acts on " +
                  std::to_string(dim));
    std::vector<std::size_t> labels;
    if (p.has("labels")) {
        const Node l = p.at("labels");
        l.require_array();
        for (std::size_t i = 0; i < l.json().size(); ++i)
            labels.push_back(l.at(i).count());
    } else {
        std::size_t boxes = 1;
        for (const auto& a : axes)
            boxes *= a.size() + 1;
        for (std::size_t i = 0; i < boxes; ++i)
            labels.push_back(i);
    }
    return rethrow_as_config(p, [&] { return classical::Partition(axes, labels); });
}

classical::PhasePoint random_point(std::size_t dim, bool dyadic, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> c(dim);
    for (double& x : c)
        x = unit(rng);
    classical::PhasePoint p(std::move(c));
    return dyadic ? classical::snap_to_dyadic(p) : p;
}

classical::PhasePoint parse_point(const Node& n, std::size_t dim) {
    n.require_array();
    std::vector<double> c;
    for (std::size_t i = 0; i < n.json().size(); ++i)
        c.push_back(n.at(i).number());
    if (c.size() != dim)
        n.fail("point has " + std::to_string(c.size()) + " coordinates, map acts on " +
               std::to_string(dim));
    return classical::PhasePoint(std::move(c));
}

bool is_exact_cat(const classical::MapSpec& m) {
    return m.kind == classical::MapKind::cat_map &&
           m.arithmetic == classical::CatArithmetic::exact_dyadic;
}

Instance build_classical(const Scenario& s) {
    const Node sys(s.system, "/system");
    auto rng = system_rng(s.seed);
    const classical::MapSpec spec = parse_map(sys.at("map"));
    classical::InvertibleMap map = rethrow_as_config(sys.at("map"), [&] { return classical::make_map(spec); });
    const std::size_t dim = map.dimension();
    const bool dyadic = is_exact_cat(spec);

    if (s.kind == ScenarioKind::classical_pure) {
        sys.require_keys({"map", "point"});
        const Node pt = sys.at("point");
        classical::PhasePoint x = pt.json().is_string() && pt.json() == "random"
                                      ? random_point(dim, dyadic, rng)
                                      : parse_point(pt, dim);
        classical::Partition partition = parse_partition(Node(s.measurement, "/measurement"), dim, rng);
        return ClassicalPureInstance{std::move(map), std::move(partition), std::move(x)};
    }

    sys.require_keys({"map", "ensemble"});
    const Node en = sys.at("ensemble");
    en.require_keys({"size", "contamination", "points", "weights", "chaotic", "audit_pairs"});
    classical::ClassicalEnsemble ensemble;
    if (en.has("points")) {
        const Node pts = en.at("points");
        pts.require_array();
        for (std::size_t i = 0; i < pts.json().size(); ++i)
            ensemble.points.push_back(parse_point(pts.at(i), dim));
        const std::size_t n = ensemble.points.size();
        if (en.has("weights")) {
            const Node w = en.at("weights");
            w.require_array();
            for (std::size_t i = 0; i < w.json().size(); ++i)
                ensemble.weights.push_back(w.at(i).number());
        } else {
            ensemble.weights.assign(n, n ? 1.0 / static_cast<double>(n) : 0.0);
        }
        if (en.has("chaotic")) {
            const Node c = en.at("chaotic");
            c.require_array();
            for (std::size_t i = 0; i < c.json().size(); ++i)
                ensemble.chaotic_flags.push_back(c.at(i).boolean());
        } else {
            ensemble.chaotic_flags.assign(n, true);
        }
        rethrow_as_config(en, [&] {
            ensemble.validate();
            return 0;
        });
    } else {
        if (!dyadic)
            sys.at("map").fail("generated ensembles need {\"type\": \"cat\", \"arithmetic\": \"exact\"}");
        const std::size_t size = en.at("size").count();
        const double delta = en.number_or("contamination", 0.0);
        if (size < 1)
            en.at("size").fail("ensemble needs at least one point");
        if (!(delta >= 0.0 && delta <= 1.0))
            en.at("contamination").fail("contamination must lie in [0, 1]");
        ensemble = classical::contaminated_cat_ensemble(size, delta, rng);
    }
    const std::size_t audit = en.count_or("audit_pairs", 0);
    classical::Partition partition = parse_partition(Node(s.measurement, "/measurement"), dim, rng);
    return ClassicalEnsembleInstance{std::move(map), std::move(partition), std::move(ensemble), audit};
}

SyntheticInstance build_synthetic(const Scenario& s) {
    const Node sys(s.system, "/system");
    sys.require_keys({"recipe"});
    const Node r = sys.at("recipe");
    r.require_keys({"outcomes", "kind", "components", "dominant_mass"});
    SyntheticRecipe recipe;
    recipe.outcome_count = r.at("outcomes").count();
    if (recipe.outcome_count < 1)
        r.at("outcomes").fail("need at least one outcome");
    const std::string kind = r.string_or("kind", "smooth-mixture");
    if (kind == "smooth-mixture")
        recipe.kind = SyntheticKind::smooth_mixture;
    else if (kind == "jump-process")
        recipe.kind = SyntheticKind::jump_process;
    else
        r.at("kind").fail("expected 'smooth-mixture' or 'jump-process'");
    recipe.components = r.count_or("components", 4);
    if (recipe.components < 1)
        r.at("components").fail("need at least one component");
    recipe.dominant_mass = r.number_or("dominant_mass", 0.0);
    if (!(recipe.dominant_mass >= 0.0 && recipe.dominant_mass <= 1.0))
        r.at("dominant_mass").fail("dominant mass must lie in [0, 1]");
    const Node meas(s.measurement, "/measurement");
    meas.require_keys({});
    return SyntheticInstance{recipe};
}

bool uses_floating_cat(const classical::MapSpec& m) {
    if (m.kind == classical::MapKind::cat_map)
        return m.arithmetic == classical::CatArithmetic::floating;
    for (const auto& part : m.parts)
        if (uses_floating_cat(part))
            return true;
    return false;
}

const classical::InvertibleMap* map_of(const Instance& instance) {
    if (const auto* c = std::get_if<ClassicalPureInstance>(&instance))
        return &c->map;
    if (const auto* c = std::get_if<ClassicalEnsembleInstance>(&instance))
        return &c->map;
    return nullptr;
}

}  // namespace

Instance build_instance(const Scenario& s) {
    switch (s.kind) {
    case ScenarioKind::quantum:
        return build_quantum(s);
    case ScenarioKind::classical_pure:
    case ScenarioKind::classical_ensemble:
        return build_classical(s);
    case ScenarioKind::synthetic_probe:
        return build_synthetic(s);
    }
    throw ConfigError("/kind", "unknown scenario kind");
}

TimeAverageConfig average_config(const Scenario& s, const Instance& instance) {
    TimeAverageConfig cfg;
    cfg.samples = s.samples;
    cfg.scheme = s.scheme;
    cfg.seed = s.seed;
    if (s.horizon) {
        cfg.horizon = *s.horizon;
    } else if (const auto* q = std::get_if<QuantumInstance>(&instance)) {
        cfg.horizon = quantum::default_time_average_config(q->hamiltonian, s.seed, s.samples).horizon;
    } else if (std::holds_alternative<SyntheticInstance>(instance)) {
        cfg.horizon = 1e3;
    } else {
        cfg.horizon = static_cast<double>(s.samples);
    }
    const auto* map = map_of(instance);
    if (map && uses_floating_cat(map->spec()) && cfg.horizon > kFloatingCatHorizonCap)
        throw ConfigError("/average/horizon",
                          "floating-point cat map iteration is capped at 1e6 steps; use "
                          "\"arithmetic\": \"exact\" for longer horizons");
    return cfg;
}

}  // namespace equil::bench::detail
