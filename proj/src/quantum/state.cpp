#include "equil/quantum/state.hpp"

#include <sstream>

#include "equil/errors.hpp"

namespace equil::quantum {

namespace {

double min_eigenvalue(const CMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
        throw DataError("density matrix must be a nonempty square matrix");
    if (!m_.allFinite())
        throw DataError("density matrix has non-finite entries");
    if (!is_hermitian(m_, kHermitianTolerance))
        throw DataError("density matrix is not Hermitian");
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "density matrix trace is " << tr.real() << ", not 1";
        throw DataError(msg.str());
    }
    m_ = 0.5 * (m_ + m_.adjoint()).eval();
    if (min_eigenvalue(m_) < -kPositivityTolerance)
        throw DataError("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0))
        throw DataError("pure state vector is zero");
    const CVector v = psi / norm;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return DensityMatrix(CMatrix::Identity(n, n) / static_cast<double>(d));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

bool DensityMatrix::is_pure(double tol) const { return std::abs(purity() - 1.0) <= tol; }

POVM::POVM(std::vector<CMatrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty())
        throw DataError("POVM needs at least one element");
    const Eigen::Index d = elements_.front().rows();
    CMatrix total = CMatrix::Zero(d, d);
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        CMatrix& m = elements_[j];
        if (m.rows() != d || m.cols() != d)
            throw DimensionError("POVM elements differ in dimension");
        if (!is_hermitian(m, kHermitianTolerance))
            throw DataError("POVM element " + std::to_string(j) + " is not Hermitian");
        m = 0.5 * (m + m.adjoint()).eval();
        if (min_eigenvalue(m) < -kPositivityTolerance)
            throw DataError("POVM element " + std::to_string(j) + " is not positive");
        total += m;
    }
    if ((total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kTraceTolerance)
        throw DataError("POVM elements do not sum to the identity");
}

POVM POVM::projective(const CMatrix& basis, const std::vector<std::size_t>& group_of_column) {
    if (basis.rows() != basis.cols() ||
        static_cast<std::size_t>(basis.cols()) != group_of_column.size())
        throw DimensionError("projective POVM: one group per basis column required");
    std::size_t n = 0;
    for (std::size_t g : group_of_column)
        n = std::max(n, g + 1);
    const Eigen::Index d = basis.rows();
    std::vector<CMatrix> elements(n, CMatrix::Zero(d, d));
    std::vector<bool> used(n, false);
    for (std::size_t c = 0; c < group_of_column.size(); ++c) {
        const auto col = basis.col(static_cast<Eigen::Index>(c));
        elements[group_of_column[c]] += col * col.adjoint();
        used[group_of_column[c]] = true;
    }
    for (bool u : used)
        if (!u)
            throw DomainError("projective POVM: every outcome needs at least one basis vector");
    return POVM(std::move(elements));
}

bool POVM::is_projective(double tol) const {
    for (const auto& m : elements_)
        if ((m * m - m).cwiseAbs().maxCoeff() > tol)
            return false;
    return true;
}

}  // namespace equil::quantum
