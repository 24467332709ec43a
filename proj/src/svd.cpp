#include "hyplab/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hyplab/error.hpp"

namespace hyplab {

namespace {

// Pairs whose normalized inner product is below this are treated as orthogonal.
constexpr double kOrthogonalityTol = 1e-15;

// Orthogonalizes the columns of g in place, accumulating the rotations into v.
// Returns the number of sweeps used.
int hestenes(Eigen::MatrixXcd& g, Eigen::MatrixXcd& v, int max_sweeps) {
    const Eigen::Index n = g.cols();
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        bool rotated = false;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double alpha = g.col(p).squaredNorm();
                const double beta = g.col(q).squaredNorm();
                const std::complex<double> gamma = g.col(p).dot(g.col(q));  // g_p^H g_q
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= kOrthogonalityTol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                // Rotate the phase out of gamma, then apply a real Jacobi rotation.
                const std::complex<double> phase = gamma / mag;
                const double zeta = (beta - alpha) / (2.0 * mag);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;

                const Eigen::VectorXcd gp = g.col(p);
                const Eigen::VectorXcd gq = g.col(q) * std::conj(phase);
                g.col(p) = c * gp - s * gq;
                g.col(q) = s * gp + c * gq;

                const Eigen::VectorXcd vp = v.col(p);
                const Eigen::VectorXcd vq = v.col(q) * std::conj(phase);
                v.col(p) = c * vp - s * vq;
                v.col(q) = s * vp + c * vq;
            }
        }
        if (!rotated) return sweep;
    }
    throw Error(ErrorKind::NoConvergence,
                "Jacobi SVD did not converge within " + std::to_string(max_sweeps) + " sweeps");
}

// Decomposes a tall (rows >= cols) matrix.
Svd tall_svd(const Eigen::MatrixXcd& a, int max_sweeps) {
    const Eigen::Index n = a.cols();
    Eigen::MatrixXcd g = a;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
    const int sweeps = hestenes(g, v, max_sweeps);

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    Eigen::VectorXd norms(n);
    for (Eigen::Index j = 0; j < n; ++j) norms(j) = g.col(j).norm();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return norms(x) > norms(y); });

    Svd out;
    out.sweeps = sweeps;
    out.s.resize(n);
    out.u = Eigen::MatrixXcd::Zero(a.rows(), n);
    out.v.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index j = order[static_cast<std::size_t>(k)];
        out.s(k) = norms(j);
        out.v.col(k) = v.col(j);
        if (norms(j) > 0.0) out.u.col(k) = g.col(j) / norms(j);
    }
    return out;
}

}  // namespace

Svd jacobi_svd(const Eigen::MatrixXcd& a, int max_sweeps) {
    if (a.size() == 0) throw Error(ErrorKind::InvalidInput, "SVD of an empty matrix");
    if (a.rows() >= a.cols()) return tall_svd(a, max_sweeps);

    // A^H = U' S V'^H, so A = V' S U'^H.
    Svd t = tall_svd(a.adjoint(), max_sweeps);
    Svd out;
    out.sweeps = t.sweeps;
    out.s = std::move(t.s);
    out.u = std::move(t.v);
    out.v = std::move(t.u);
    return out;
}

SigmaExtremes sigma_extremes(const Eigen::MatrixXcd& a, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
    const Svd svd = jacobi_svd(a);
    return {svd.s(0), svd.s(svd.s.size() - 1), svd.sweeps};
}

std::size_t numerical_rank(const Svd& svd, double tol) {
    if (svd.s.size() == 0) return 0;
    const double cutoff = tol * svd.s(0);
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < svd.s.size(); ++i) {
        if (svd.s(i) > cutoff) ++rank;
    }
    return rank;
}

}  // namespace hyplab
