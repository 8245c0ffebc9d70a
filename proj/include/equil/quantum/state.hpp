#pragma once

#include <cstddef>
#include <vector>

#include "equil/quantum/linalg.hpp"

namespace equil::quantum {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPositivityTolerance = 1e-10;

// Hermitian, unit-trace, positive semidefinite matrix. Construction throws
// DataError otherwise.
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix m);

    // |psi><psi| / <psi|psi>.
    static DensityMatrix pure(const CVector& psi);
    static DensityMatrix maximally_mixed(std::size_t d);

    std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const noexcept { return m_; }

    double purity() const;
    bool is_pure(double tol = 1e-9) const;

private:
    CMatrix m_;
};

// Positive operators summing to the identity.
class POVM {
public:
    explicit POVM(std::vector<CMatrix> elements);

    // Projective measurement: element j projects onto the columns of the
    // unitary `basis` whose group is j. Every group in [0, N) must be used.
    static POVM projective(const CMatrix& basis, const std::vector<std::size_t>& group_of_column);

    std::size_t outcome_count() const noexcept { return elements_.size(); }
    std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(elements_.front().rows());
    }
    const std::vector<CMatrix>& elements() const noexcept { return elements_; }
    const CMatrix& operator[](std::size_t j) const { return elements_[j]; }

    bool is_projective(double tol = 1e-9) const;

private:
    std::vector<CMatrix> elements_;
};

}  // namespace equil::quantum
