#include "equil/quantum/random.hpp"

#include <algorithm>
#include <numeric>

#include "equil/errors.hpp"

namespace equil::quantum {

std::string_view to_string(SpectrumFamily f) {
    return f == SpectrumFamily::uniform ? "uniform" : "equally-spaced";
}
std::string_view to_string(PovmKind k) { return k == PovmKind::projective ? "projective" : "general"; }
std::string_view to_string(StateKind k) { return k == StateKind::pure ? "pure" : "mixed"; }

SpectrumFamily parse_spectrum_family(std::string_view s) {
    if (s == "uniform")
        return SpectrumFamily::uniform;
    if (s == "equally-spaced")
        return SpectrumFamily::equally_spaced;
    throw DomainError("unknown spectrum family '" + std::string(s) + "'");
}

PovmKind parse_povm_kind(std::string_view s) {
    if (s == "projective")
        return PovmKind::projective;
    if (s == "general")
        return PovmKind::general;
    throw DomainError("unknown POVM kind '" + std::string(s) + "'");
}

StateKind parse_state_kind(std::string_view s) {
    if (s == "pure")
        return StateKind::pure;
    if (s == "mixed")
        return StateKind::mixed;
    throw DomainError("unknown state kind '" + std::string(s) + "'");
}

HamiltonianSpectrum random_spectrum(std::size_t d, SpectrumFamily family, std::mt19937_64& rng) {
    if (d == 0)
        throw DomainError("random_spectrum: dimension must be positive");
    RVector e(static_cast<Eigen::Index>(d));
    if (family == SpectrumFamily::uniform) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (Eigen::Index n = 0; n < e.size(); ++n)
            e[n] = unit(rng);
    } else {
        const double spacing = d > 1 ? 1.0 / static_cast<double>(d - 1) : 1.0;
        for (Eigen::Index n = 0; n < e.size(); ++n)
            e[n] = static_cast<double>(n) * spacing;
    }
    return HamiltonianSpectrum::from_eigensystem(std::move(e), random_unitary(d, rng));
}

DensityMatrix random_pure_state(std::size_t d, std::mt19937_64& rng) {
    return DensityMatrix::pure(ginibre(d, 1, rng).col(0));
}

DensityMatrix random_mixed_state(std::size_t d, std::mt19937_64& rng) {
    const CMatrix g = ginibre(d, d, rng);
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(std::move(m));
}

DensityMatrix random_state(std::size_t d, StateKind kind, std::mt19937_64& rng) {
    return kind == StateKind::pure ? random_pure_state(d, rng) : random_mixed_state(d, rng);
}

namespace {

CMatrix inverse_sqrt_psd(const CMatrix& s) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(s);
    RVector inv = solver.eigenvalues();
    for (Eigen::Index i = 0; i < inv.size(); ++i)
        inv[i] = 1.0 / std::sqrt(inv[i]);
    return solver.eigenvectors() * inv.cast<Complex>().asDiagonal() *
           solver.eigenvectors().adjoint();
}

std::vector<CMatrix> general_elements(std::size_t d, std::size_t outcomes, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> rank(1, d);
    const auto di = static_cast<Eigen::Index>(d);
    std::vector<CMatrix> a;
    CMatrix s;
    // The ranks must add up to at least d so that S is invertible; redraw in
    // the (measure-zero in exact arithmetic) case that S is ill-conditioned.
    for (;;) {
        std::vector<std::size_t> ranks(outcomes);
        std::size_t total = 0;
        for (auto& r : ranks)
            total += r = rank(rng);
        for (std::size_t j = 0; total < d; ++j) {
            const std::size_t add = std::min(d - ranks[j], d - total);
            ranks[j] += add;
            total += add;
        }
        a.clear();
        s = CMatrix::Zero(di, di);
        for (std::size_t r : ranks) {
            const CMatrix g = ginibre(d, r, rng);
            a.push_back(g * g.adjoint());
            s += a.back();
        }
        const RVector ev = Eigen::SelfAdjointEigenSolver<CMatrix>(s, Eigen::EigenvaluesOnly).eigenvalues();
        if (ev.minCoeff() > 1e-8 * ev.maxCoeff())
            break;
    }
    const CMatrix t = inverse_sqrt_psd(s);
    for (auto& m : a) {
        m = t * m * t;
        m = 0.5 * (m + m.adjoint()).eval();
    }
    return a;
}

}  // namespace

POVM random_povm(std::size_t d, std::size_t outcomes, PovmKind kind, std::mt19937_64& rng) {
    if (outcomes == 0 || d == 0)
        throw DomainError("random_povm: need positive dimension and outcome count");
    if (kind == PovmKind::general)
        return POVM(general_elements(d, outcomes, rng));
    if (outcomes > d)
        throw DomainError("random_povm: a projective measurement has at most d outcomes");
    std::vector<std::size_t> group(d);
    std::iota(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(outcomes), std::size_t{0});
    std::uniform_int_distribution<std::size_t> pick(0, outcomes - 1);
    for (std::size_t c = outcomes; c < d; ++c)
        group[c] = pick(rng);
    std::shuffle(group.begin(), group.end(), rng);
    return POVM::projective(random_unitary(d, rng), group);
}

POVM near_identity_povm(std::size_t d, std::size_t outcomes, double eta, std::mt19937_64& rng) {
    if (outcomes < 2)
        throw DomainError("near_identity_povm: need at least two outcomes");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("near_identity_povm: eta must lie in [0, 1]");
    const auto di = static_cast<Eigen::Index>(d);
    std::vector<CMatrix> elements{(1.0 - eta) * CMatrix::Identity(di, di)};
    for (auto& m : general_elements(d, outcomes - 1, rng))
        elements.push_back(eta * m);
    return POVM(std::move(elements));
}

}  // namespace equil::quantum
