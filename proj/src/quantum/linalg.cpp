#include "equil/quantum/linalg.hpp"

#include <cmath>

#include "equil/errors.hpp"

namespace equil::quantum {

double hermiticity_defect(const CMatrix& m) {
    if (m.rows() != m.cols())
        return INFINITY;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix partial_trace_second(const CMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    const auto da = static_cast<Eigen::Index>(dim_a);
    const auto db = static_cast<Eigen::Index>(dim_b);
    if (m.rows() != da * db || m.cols() != da * db)
        throw DimensionError("partial_trace_second: operator dimension does not match factors");
    CMatrix out = CMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            for (Eigen::Index k = 0; k < db; ++k)
                out(i, j) += m(i * db + k, j * db + k);
    return out;
}

CMatrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

CMatrix random_unitary(std::size_t d, std::mt19937_64& rng) {
    const CMatrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of R's diagonal makes Q Haar distributed.
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0)
            q.col(j) *= rjj / mag;
    }
    return q;
}

CMatrix unitary_with_first_column(const CVector& v) {
    const double norm = v.norm();
    if (!(norm > 0.0))
        throw DomainError("unitary_with_first_column: zero vector");
    const Eigen::Index d = v.size();
    CMatrix a = CMatrix::Identity(d, d);
    a.col(0) = v;
    Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ();
    const CVector target = v / norm;
    const Complex overlap = q.col(0).dot(target);
    q.col(0) *= overlap / std::abs(overlap);
    return q;
}

}  // namespace equil::quantum
