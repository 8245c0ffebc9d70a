#include "equil/quantum/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "equil/errors.hpp"

namespace equil::quantum {

namespace {

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionError(std::string(what) + ": dimension mismatch");
}

}  // namespace

DensityMatrix evolve_density(const DensityMatrix& rho, const HamiltonianSpectrum& h, double t) {
    require_same_dimension(rho.dimension(), h.dimension(), "evolve_density");
    CMatrix r = h.to_energy_basis(rho.matrix());
    const RVector& e = h.eigenvalues();
    CVector phase(e.size());
    for (Eigen::Index n = 0; n < e.size(); ++n)
        phase[n] = std::polar(1.0, -e[n] * t);
    for (Eigen::Index j = 0; j < r.cols(); ++j)
        for (Eigen::Index n = 0; n < r.rows(); ++n)
            r(n, j) *= phase[n] * std::conj(phase[j]);
    return DensityMatrix(h.from_energy_basis(r));
}

DensityMatrix dephase(const DensityMatrix& rho, const HamiltonianSpectrum& h) {
    require_same_dimension(rho.dimension(), h.dimension(), "dephase");
    CMatrix r = h.to_energy_basis(rho.matrix());
    const auto& space = h.eigenspace_of_level();
    for (Eigen::Index j = 0; j < r.cols(); ++j)
        for (Eigen::Index n = 0; n < r.rows(); ++n)
            if (space[static_cast<std::size_t>(n)] != space[static_cast<std::size_t>(j)])
                r(n, j) = 0.0;
    return DensityMatrix(h.from_energy_basis(r));
}

double effective_dimension(const DensityMatrix& rho, const HamiltonianSpectrum& h) {
    require_same_dimension(rho.dimension(), h.dimension(), "effective_dimension");
    const CMatrix r = h.to_energy_basis(rho.matrix());
    double participation = 0.0;
    for (const auto& space : h.eigenspaces()) {
        double w = 0.0;
        for (std::size_t n : space)
            w += r(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)).real();
        participation += w * w;
    }
    return 1.0 / participation;
}

OutcomeDistribution outcome_distribution(const DensityMatrix& rho, const POVM& povm) {
    require_same_dimension(rho.dimension(), povm.dimension(), "outcome_distribution");
    std::vector<double> p;
    p.reserve(povm.outcome_count());
    for (const auto& m : povm.elements())
        p.push_back(std::max(0.0, (m * rho.matrix()).trace().real()));
    return OutcomeDistribution::normalized(std::move(p));
}

OutcomeDistribution equilibrium_distribution(const DensityMatrix& rho,
                                             const HamiltonianSpectrum& h, const POVM& povm) {
    return outcome_distribution(dephase(rho, h), povm);
}

double quantum_bound(std::size_t outcome_count, std::size_t gap_degeneracy, double d_eff) {
    if (outcome_count < 1 || gap_degeneracy < 1 || !(d_eff >= 1.0 - 1e-12))
        throw DomainError("quantum_bound: need N >= 1, D_G >= 1, d_eff >= 1");
    return 0.5 * std::sqrt(static_cast<double>(gap_degeneracy) *
                           static_cast<double>(outcome_count - 1) / d_eff);
}

double quantum_bound_without_identity_shift(std::size_t outcome_count,
                                            std::size_t gap_degeneracy, double d_eff) {
    if (outcome_count < 1 || gap_degeneracy < 1 || !(d_eff >= 1.0 - 1e-12))
        throw DomainError("quantum bound: need N >= 1, D_G >= 1, d_eff >= 1");
    return 0.5 * std::sqrt(static_cast<double>(gap_degeneracy) *
                           static_cast<double>(outcome_count) / d_eff);
}

std::size_t max_outcomes_for_equilibration(double epsilon, double d_eff,
                                           std::size_t gap_degeneracy) {
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("max_outcomes_for_equilibration: epsilon must lie in [0, 1)");
    if (gap_degeneracy < 1 || !(d_eff >= 1.0 - 1e-12))
        throw DomainError("max_outcomes_for_equilibration: need D_G >= 1, d_eff >= 1");
    const double n = 4.0 * d_eff * epsilon * epsilon / static_cast<double>(gap_degeneracy) + 1.0;
    // Absorb rounding so exact integer thresholds (e.g. 4 * 100 * 0.01 + 1) count.
    return static_cast<std::size_t>(std::floor(n * (1.0 + 1e-12)));
}

TrajectoryProbe quantum_probe(const DensityMatrix& rho, const HamiltonianSpectrum& h,
                              const POVM& povm) {
    require_same_dimension(rho.dimension(), h.dimension(), "quantum_probe");
    require_same_dimension(povm.dimension(), h.dimension(), "quantum_probe");
    const CMatrix r = h.to_energy_basis(rho.matrix());
    // p_j(t) = sum_{n,m} r_nm (M_j)_mn e^{-i (E_n - E_m) t} = u^T A_j conj(u)
    // with u_n = e^{-i E_n t} and A_j = r o (M_j)^T.
    std::vector<CMatrix> weighted;
    for (const auto& m : povm.elements())
        weighted.push_back(r.cwiseProduct(h.to_energy_basis(m).transpose()));
    const RVector energies = h.eigenvalues();
    const std::size_t n_out = povm.outcome_count();
    auto sample = [weighted = std::move(weighted), energies, n_out](double t) {
        CVector u(energies.size());
        for (Eigen::Index n = 0; n < energies.size(); ++n)
            u[n] = std::polar(1.0, -energies[n] * t);
        const CVector uc = u.conjugate();
        std::vector<double> p(n_out);
        for (std::size_t j = 0; j < n_out; ++j)
            p[j] = std::max(0.0, (u.array() * (weighted[j] * uc).array()).sum().real());
        return OutcomeDistribution::normalized(std::move(p));
    };
    return TrajectoryProbe(n_out, sample);
}

TimeAverageConfig default_time_average_config(const HamiltonianSpectrum& h, std::uint64_t seed,
                                              std::size_t samples) {
    const double gap = h.smallest_gap();
    TimeAverageConfig cfg;
    cfg.horizon = 1e3 * 2.0 * std::numbers::pi / (gap > 0.0 ? gap : 1.0);
    cfg.samples = samples;
    cfg.scheme = SamplingScheme::stratified_random;
    cfg.seed = seed;
    return cfg;
}

}  // namespace equil::quantum
