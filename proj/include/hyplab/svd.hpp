#pragma once

// Singular value decomposition of small dense complex matrices by one-sided
// (Hestenes) Jacobi rotations.

#include <Eigen/Dense>
#include <cstddef>

namespace hyplab {

/// Thin decomposition A = U * diag(s) * V^H with s sorted descending and
/// min(rows, cols) singular values. Columns of U paired with zero singular
/// values are zero.
struct Svd {
    Eigen::MatrixXcd u;
    Eigen::VectorXd s;
    Eigen::MatrixXcd v;
    int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 64;

/// Throws NoConvergence (InvalidInput for an empty matrix) after max_sweeps
/// sweeps without reaching orthogonality.
Svd jacobi_svd(const Eigen::MatrixXcd& a, int max_sweeps = kMaxJacobiSweeps);

struct SigmaExtremes {
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    int sweeps = 0;
};

/// Largest and smallest of the min(rows, cols) singular values. The Jacobi
/// kernel reaches relative accuracy far below any tol this is asked for;
/// tol must be positive and is validated only.
SigmaExtremes sigma_extremes(const Eigen::MatrixXcd& a, double tol);

/// Count of singular values strictly above tol * sigma_max.
std::size_t numerical_rank(const Svd& svd, double tol);

}  // namespace hyplab
