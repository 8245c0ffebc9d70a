#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "equil/quantum/linalg.hpp"

namespace equil::quantum {

// Relative tolerance (times the spectral range) used by default both for
// grouping eigenvalues into eigenspaces and for deciding that two gaps are
// equal.
inline constexpr double kDefaultRelativeTolerance = 1e-9;

// Energy levels and eigenvectors of a Hamiltonian (hbar = 1), with the levels
// grouped into degenerate eigenspaces. Eigenvalues are ascending; column n of
// eigenvectors() is the eigenvector of eigenvalues()[n]. Consecutive levels
// closer than the degeneracy tolerance share an eigenspace.
class HamiltonianSpectrum {
public:
    static HamiltonianSpectrum from_hermitian(const CMatrix& h,
                                              double relative_tol = kDefaultRelativeTolerance);
    static HamiltonianSpectrum from_eigensystem(RVector eigenvalues, CMatrix eigenvectors,
                                                double relative_tol = kDefaultRelativeTolerance);
    // As above with an absolute degeneracy tolerance.
    static HamiltonianSpectrum from_eigensystem_absolute(RVector eigenvalues, CMatrix eigenvectors,
                                                         double absolute_tol);
    // Hamiltonian diagonal in the computational basis.
    static HamiltonianSpectrum diagonal(const std::vector<double>& energies,
                                       double relative_tol = kDefaultRelativeTolerance);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(eigenvalues_.size()); }
    const RVector& eigenvalues() const noexcept { return eigenvalues_; }
    const CMatrix& eigenvectors() const noexcept { return eigenvectors_; }

    std::size_t eigenspace_count() const noexcept { return eigenspaces_.size(); }
    const std::vector<std::vector<std::size_t>>& eigenspaces() const noexcept { return eigenspaces_; }
    // Mean eigenvalue of each eigenspace.
    const std::vector<double>& eigenspace_energies() const noexcept { return energies_; }
    // Eigenspace index of every level.
    const std::vector<std::size_t>& eigenspace_of_level() const noexcept { return space_of_; }

    double spectral_range() const noexcept;
    double degeneracy_tolerance() const noexcept { return degeneracy_tol_; }

    CMatrix eigenspace_projector(std::size_t k) const;
    CMatrix matrix() const;

    // Expresses an operator in the energy eigenbasis and back.
    CMatrix to_energy_basis(const CMatrix& m) const;
    CMatrix from_energy_basis(const CMatrix& m) const;

    // Smallest nonzero |E_a - E_b| over distinct eigenspaces (0 if there is
    // only one eigenspace).
    double smallest_gap() const noexcept;

private:
    HamiltonianSpectrum(RVector eigenvalues, CMatrix eigenvectors, double absolute_tol);

    RVector eigenvalues_;
    CMatrix eigenvectors_;
    double degeneracy_tol_;
    std::vector<std::vector<std::size_t>> eigenspaces_;
    std::vector<double> energies_;
    std::vector<std::size_t> space_of_;
};

// Default absolute gap tolerance: kDefaultRelativeTolerance times the
// spectral range.
double default_gap_tolerance(const HamiltonianSpectrum& h);

struct GapEntry {
    double value = 0.0;          // E_from - E_to
    std::size_t from = 0;        // eigenspace indices, from != to
    std::size_t to = 0;
    std::size_t gap_class = 0;
};

// All gaps between ordered pairs of distinct eigenspaces, grouped into classes
// of equal gaps. Sorted gap values closer than the tolerance are chained into
// one class.
class GapTable {
public:
    GapTable(const HamiltonianSpectrum& h, double gap_tolerance);

    const std::vector<GapEntry>& entries() const noexcept { return entries_; }
    const std::vector<std::size_t>& class_sizes() const noexcept { return class_sizes_; }
    double tolerance() const noexcept { return tolerance_; }

    // Largest class size; 1 when there are no gaps.
    std::size_t max_class_size() const noexcept;

private:
    std::vector<GapEntry> entries_;
    std::vector<std::size_t> class_sizes_;
    double tolerance_;
};

// Largest number of ordered eigenspace pairs sharing one energy gap. Defined
// as 1 for a Hamiltonian with a single eigenspace.
std::size_t max_gap_degeneracy(const HamiltonianSpectrum& h, double gap_tolerance);
std::size_t max_gap_degeneracy(const HamiltonianSpectrum& h);

// D_G at 0.1x, 1x and 10x the given tolerance.
std::array<std::size_t, 3> gap_degeneracy_sensitivity(const HamiltonianSpectrum& h,
                                                       double gap_tolerance);

// Assigns each value to a class of approximately equal values: sorted values
// closer than `tolerance` to their predecessor join its class. Returns class
// ids in input order and writes the class count.
std::vector<std::size_t> cluster_values(const std::vector<double>& values, double tolerance,
                                        std::size_t& class_count);

// CSV of every gap with its class annotation:
// from,to,energy_from,energy_to,gap,gap_class,class_size.
void write_spectrum_csv(std::ostream& os, const HamiltonianSpectrum& h, double gap_tolerance);

}  // namespace equil::quantum
