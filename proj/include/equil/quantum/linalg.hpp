#pragma once

#include <complex>
#include <cstddef>
#include <random>

#include <Eigen/Dense>

namespace equil::quantum {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

double hermiticity_defect(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol);

// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Partial trace over the second factor of a (dim_a * dim_b)-dimensional
// operator ordered as a (x) b.
CMatrix partial_trace_second(const CMatrix& m, std::size_t dim_a, std::size_t dim_b);

// Haar-random unitary (QR of a complex Ginibre matrix with phase correction).
CMatrix random_unitary(std::size_t d, std::mt19937_64& rng);

// Complex Ginibre matrix with standard normal real and imaginary parts.
CMatrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

// Unitary whose first column is `v` / |v| (v must be nonzero).
CMatrix unitary_with_first_column(const CVector& v);

}  // namespace equil::quantum
