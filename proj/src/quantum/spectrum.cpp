#include "equil/quantum/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "equil/errors.hpp"

namespace equil::quantum {

std::vector<std::size_t> cluster_values(const std::vector<double>& values, double tolerance,
                                        std::size_t& class_count) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::size_t> cls(values.size(), 0);
    class_count = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const double step = i == 0 ? 0.0 : values[order[i]] - values[order[i - 1]];
        if (i == 0 || !(step < tolerance || step == 0.0))
            ++class_count;
        cls[order[i]] = class_count - 1;
    }
    return cls;
}

namespace {

// Spectral range, floored at 1e-6 of the largest |E| so that a numerically
// degenerate spectrum (range ~ rounding noise) still groups into one space.
double tolerance_scale(const RVector& sorted) {
    const double range = sorted[sorted.size() - 1] - sorted[0];
    const double magnitude = std::max(std::abs(sorted[0]), std::abs(sorted[sorted.size() - 1]));
    return std::max(range, 1e-6 * magnitude);
}

}  // namespace

HamiltonianSpectrum::HamiltonianSpectrum(RVector eigenvalues, CMatrix eigenvectors,
                                         double absolute_tol)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)),
      degeneracy_tol_(absolute_tol) {
    const auto d = static_cast<std::size_t>(eigenvalues_.size());
    space_of_.resize(d);
    for (std::size_t n = 0; n < d; ++n) {
        const double step = n == 0 ? 0.0 : eigenvalues_[n] - eigenvalues_[n - 1];
        if (n == 0 || !(step < degeneracy_tol_ || step == 0.0))
            eigenspaces_.emplace_back();
        eigenspaces_.back().push_back(n);
        space_of_[n] = eigenspaces_.size() - 1;
    }
    for (const auto& space : eigenspaces_) {
        double e = 0.0;
        for (std::size_t n : space)
            e += eigenvalues_[n];
        energies_.push_back(e / static_cast<double>(space.size()));
    }
}

HamiltonianSpectrum HamiltonianSpectrum::from_eigensystem(RVector eigenvalues,
                                                          CMatrix eigenvectors,
                                                          double relative_tol) {
    if (eigenvalues.size() == 0)
        throw DimensionError("Hamiltonian must have positive dimension");
    if (!(relative_tol >= 0.0))
        throw DomainError("degeneracy tolerance must be nonnegative");
    RVector sorted = eigenvalues;
    std::sort(sorted.begin(), sorted.end());
    const double absolute = relative_tol * tolerance_scale(sorted);
    return from_eigensystem_absolute(std::move(eigenvalues), std::move(eigenvectors), absolute);
}

HamiltonianSpectrum HamiltonianSpectrum::from_eigensystem_absolute(RVector eigenvalues,
                                                                   CMatrix eigenvectors,
                                                                   double absolute_tol) {
    const Eigen::Index d = eigenvalues.size();
    if (d == 0)
        throw DimensionError("Hamiltonian must have positive dimension");
    if (eigenvectors.rows() != d || eigenvectors.cols() != d)
        throw DimensionError("eigenvector matrix does not match the number of eigenvalues");
    for (Eigen::Index n = 0; n < d; ++n)
        if (!std::isfinite(eigenvalues[n]))
            throw DataError("non-finite eigenvalue");
    const double defect =
        (eigenvectors.adjoint() * eigenvectors - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > 1e-9)
        throw DataError("eigenvector matrix is not unitary");
    if (!(absolute_tol >= 0.0))
        throw DomainError("degeneracy tolerance must be nonnegative");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return eigenvalues[a] < eigenvalues[b]; });
    RVector sorted(d);
    CMatrix vecs(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        sorted[i] = eigenvalues[order[static_cast<std::size_t>(i)]];
        vecs.col(i) = eigenvectors.col(order[static_cast<std::size_t>(i)]);
    }
    return HamiltonianSpectrum(std::move(sorted), std::move(vecs), absolute_tol);
}

HamiltonianSpectrum HamiltonianSpectrum::from_hermitian(const CMatrix& h, double relative_tol) {
    if (h.rows() != h.cols() || h.rows() == 0)
        throw DimensionError("Hamiltonian must be a nonempty square matrix");
    if (!is_hermitian(h, 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff())))
        throw DataError("Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw DataError("Hamiltonian eigendecomposition did not converge");
    return from_eigensystem(solver.eigenvalues(), solver.eigenvectors(), relative_tol);
}

HamiltonianSpectrum HamiltonianSpectrum::diagonal(const std::vector<double>& energies,
                                                  double relative_tol) {
    const auto d = static_cast<Eigen::Index>(energies.size());
    RVector e(d);
    for (Eigen::Index i = 0; i < d; ++i)
        e[i] = energies[static_cast<std::size_t>(i)];
    return from_eigensystem(std::move(e), CMatrix::Identity(d, d), relative_tol);
}

double HamiltonianSpectrum::spectral_range() const noexcept {
    return eigenvalues_[eigenvalues_.size() - 1] - eigenvalues_[0];
}

CMatrix HamiltonianSpectrum::eigenspace_projector(std::size_t k) const {
    const Eigen::Index d = eigenvalues_.size();
    CMatrix p = CMatrix::Zero(d, d);
    for (std::size_t n : eigenspaces_.at(k)) {
        const auto col = eigenvectors_.col(static_cast<Eigen::Index>(n));
        p += col * col.adjoint();
    }
    return p;
}

CMatrix HamiltonianSpectrum::matrix() const {
    return eigenvectors_ * eigenvalues_.cast<Complex>().asDiagonal() * eigenvectors_.adjoint();
}

CMatrix HamiltonianSpectrum::to_energy_basis(const CMatrix& m) const {
    if (m.rows() != eigenvalues_.size() || m.cols() != eigenvalues_.size())
        throw DimensionError("operator dimension does not match the Hamiltonian");
    return eigenvectors_.adjoint() * m * eigenvectors_;
}

CMatrix HamiltonianSpectrum::from_energy_basis(const CMatrix& m) const {
    return eigenvectors_ * m * eigenvectors_.adjoint();
}

double HamiltonianSpectrum::smallest_gap() const noexcept {
    double best = 0.0;
    for (std::size_t k = 1; k < energies_.size(); ++k) {
        const double g = energies_[k] - energies_[k - 1];
        if (g > 0.0 && (best == 0.0 || g < best))
            best = g;
    }
    return best;
}

double default_gap_tolerance(const HamiltonianSpectrum& h) {
    const double scale = tolerance_scale(h.eigenvalues());
    return kDefaultRelativeTolerance * (scale > 0.0 ? scale : 1.0);
}

GapTable::GapTable(const HamiltonianSpectrum& h, double gap_tolerance)
    : tolerance_(gap_tolerance) {
    if (!(gap_tolerance >= 0.0))
        throw DomainError("gap tolerance must be nonnegative");
    const auto& e = h.eigenspace_energies();
    std::vector<double> values;
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = 0; b < e.size(); ++b)
            if (a != b) {
                entries_.push_back({e[a] - e[b], a, b, 0});
                values.push_back(e[a] - e[b]);
            }
    std::size_t count = 0;
    const auto cls = cluster_values(values, gap_tolerance, count);
    class_sizes_.assign(count, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i].gap_class = cls[i];
        ++class_sizes_[cls[i]];
    }
}

std::size_t GapTable::max_class_size() const noexcept {
    if (class_sizes_.empty())
        return 1;
    return *std::max_element(class_sizes_.begin(), class_sizes_.end());
}

std::size_t max_gap_degeneracy(const HamiltonianSpectrum& h, double gap_tolerance) {
    return GapTable(h, gap_tolerance).max_class_size();
}

std::size_t max_gap_degeneracy(const HamiltonianSpectrum& h) {
    return max_gap_degeneracy(h, default_gap_tolerance(h));
}

std::array<std::size_t, 3> gap_degeneracy_sensitivity(const HamiltonianSpectrum& h,
                                                      double gap_tolerance) {
    return {max_gap_degeneracy(h, 0.1 * gap_tolerance), max_gap_degeneracy(h, gap_tolerance),
            max_gap_degeneracy(h, 10.0 * gap_tolerance)};
}

void write_spectrum_csv(std::ostream& os, const HamiltonianSpectrum& h, double gap_tolerance) {
    const GapTable table(h, gap_tolerance);
    const auto& e = h.eigenspace_energies();
    const auto old = os.precision(17);
    os << "from,to,energy_from,energy_to,gap,gap_class,class_size\n";
    for (const auto& g : table.entries())
        os << g.from << ',' << g.to << ',' << e[g.from] << ',' << e[g.to] << ',' << g.value << ','
           << g.gap_class << ',' << table.class_sizes()[g.gap_class] << '\n';
    os.precision(old);
}

}  // namespace equil::quantum
