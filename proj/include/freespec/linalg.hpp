#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace freespec {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream index); the same pair always yields
/// the same sequence.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

/// Matrix with i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
Eigen::MatrixXcd ginibre(Eigen::Index n, Rng& rng);
Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// First `cols` columns of a Haar unitary of size `rows` (thin QR).
Eigen::MatrixXcd haar_columns(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// diag(R) moved into Q.
Eigen::MatrixXcd haar_unitary(Eigen::Index n, Rng& rng);

/// All eigenvalues of a square complex matrix (LAPACK zgeev, no vectors).
std::vector<std::complex<double>> eigenvalues(Eigen::MatrixXcd m);

/// Singular values in decreasing order (LAPACK zgesdd, no vectors).
Eigen::VectorXd singular_values(Eigen::MatrixXcd m);

/// log |det M| from an LU factorization; each pivot modulus is floored at
/// `floor` so exactly singular inputs stay finite.
double log_abs_det(Eigen::MatrixXcd m, double floor = 1e-14);

}  // namespace freespec
