#include "equil/quantum/moments.hpp"

#include <algorithm>
#include <cmath>

#include "equil/errors.hpp"

namespace equil::quantum {

namespace {

void require_pure(const DensityMatrix& rho) {
    if (!rho.is_pure(1e-9))
        throw DomainError("state must be pure (tr rho^2 = 1); purify mixed states first");
}

CVector dominant_vector(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
    const Eigen::Index last = solver.eigenvalues().size() - 1;
    return solver.eigenvectors().col(last);
}

}  // namespace

CMatrix single_support_energy_basis(const DensityMatrix& rho_pure, const HamiltonianSpectrum& h) {
    require_pure(rho_pure);
    if (rho_pure.dimension() != h.dimension())
        throw DimensionError("single_support_energy_basis: dimension mismatch");
    const CMatrix& v = h.eigenvectors();
    const CVector psi_e = v.adjoint() * dominant_vector(rho_pure);
    CMatrix w = v;
    for (const auto& space : h.eigenspaces()) {
        const auto first = static_cast<Eigen::Index>(space.front());
        const auto size = static_cast<Eigen::Index>(space.size());
        if (size < 2)
            continue;
        const CVector component = psi_e.segment(first, size);
        if (component.norm() < 1e-14)
            continue;
        w.middleCols(first, size) = v.middleCols(first, size) * unitary_with_first_column(component);
    }
    return w;
}

double second_moment_exact(const DensityMatrix& rho_pure, const CMatrix& p,
                           const HamiltonianSpectrum& h, double gap_tolerance) {
    require_pure(rho_pure);
    const auto d = static_cast<Eigen::Index>(h.dimension());
    if (rho_pure.dimension() != h.dimension() || p.rows() != d || p.cols() != d)
        throw DimensionError("second_moment_exact: dimension mismatch");
    if (!is_hermitian(p, 1e-10))
        throw DomainError("second_moment_exact: measurement operator must be Hermitian");

    const CMatrix w = single_support_energy_basis(rho_pure, h);
    const CMatrix r = w.adjoint() * rho_pure.matrix() * w;
    const CMatrix pe = w.adjoint() * p * w;
    const auto& space_of = h.eigenspace_of_level();
    const auto& energy = h.eigenspace_energies();

    std::vector<double> gaps;
    std::vector<Complex> v;
    gaps.reserve(static_cast<std::size_t>(d * d));
    v.reserve(static_cast<std::size_t>(d * d));
    for (Eigen::Index n = 0; n < d; ++n)
        for (Eigen::Index j = 0; j < d; ++j) {
            if (n == j)
                continue;
            gaps.push_back(energy[space_of[static_cast<std::size_t>(n)]] -
                           energy[space_of[static_cast<std::size_t>(j)]]);
            v.push_back(r(n, j) * pe(j, n));
        }
    std::size_t classes = 0;
    const auto cls = cluster_values(gaps, gap_tolerance, classes);
    std::vector<Complex> class_sum(classes, Complex{});
    for (std::size_t a = 0; a < v.size(); ++a)
        class_sum[cls[a]] += v[a];
    double total = 0.0;
    for (const Complex& s : class_sum)
        total += std::norm(s);
    return total;
}

double second_moment_exact(const DensityMatrix& rho_pure, const CMatrix& p,
                           const HamiltonianSpectrum& h) {
    return second_moment_exact(rho_pure, p, h, default_gap_tolerance(h));
}

std::size_t gap_matrix_norm(const HamiltonianSpectrum& h, double gap_tolerance) {
    return max_gap_degeneracy(h, gap_tolerance);
}

double shifted_second_moment_bound(const CMatrix& p, const DensityMatrix& omega,
                                   std::size_t outcome_count, std::size_t gap_norm) {
    if (outcome_count < 1)
        throw DomainError("shifted_second_moment_bound: need at least one outcome");
    const CMatrix w2 = omega.matrix() * omega.matrix();
    const double n = static_cast<double>(outcome_count);
    const double value = (p * w2).trace().real() * (1.0 - 2.0 / n) + w2.trace().real() / (n * n);
    return static_cast<double>(gap_norm) * value;
}

Purification purify(const DensityMatrix& rho) {
    const std::size_t d = rho.dimension();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
    const RVector& lambda = solver.eigenvalues();
    const CMatrix& vecs = solver.eigenvectors();
    const auto di = static_cast<Eigen::Index>(d);
    CVector psi = CVector::Zero(di * di);
    // Largest weight pairs with ancilla |0>, so a pure input maps to rho (x) |0><0|.
    for (Eigen::Index k = 0; k < di; ++k) {
        const Eigen::Index src = di - 1 - k;
        const double weight = std::sqrt(std::max(0.0, lambda[src]));
        if (weight == 0.0)
            continue;
        for (Eigen::Index s = 0; s < di; ++s)
            psi[s * di + k] += weight * vecs(s, src);
    }
    return Purification{DensityMatrix::pure(psi), d, d};
}

HamiltonianSpectrum extend_with_null_ancilla(const HamiltonianSpectrum& h,
                                             std::size_t ancilla_dimension) {
    if (ancilla_dimension == 0)
        throw DomainError("ancilla dimension must be positive");
    const auto d = static_cast<Eigen::Index>(h.dimension());
    const auto da = static_cast<Eigen::Index>(ancilla_dimension);
    RVector e(d * da);
    CMatrix vecs = CMatrix::Zero(d * da, d * da);
    for (Eigen::Index n = 0; n < d; ++n)
        for (Eigen::Index a = 0; a < da; ++a) {
            const Eigen::Index col = n * da + a;
            e[col] = h.eigenvalues()[n];
            for (Eigen::Index s = 0; s < d; ++s)
                vecs(s * da + a, col) = h.eigenvectors()(s, n);
        }
    return HamiltonianSpectrum::from_eigensystem_absolute(std::move(e), std::move(vecs),
                                                          h.degeneracy_tolerance());
}

POVM extend_povm(const POVM& povm, std::size_t ancilla_dimension) {
    const auto da = static_cast<Eigen::Index>(ancilla_dimension);
    const CMatrix id = CMatrix::Identity(da, da);
    std::vector<CMatrix> out;
    for (const auto& m : povm.elements())
        out.push_back(kron(m, id));
    return POVM(std::move(out));
}

}  // namespace equil::quantum
