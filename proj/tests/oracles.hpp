#pragma once

// Independent reference computations for tests. Nothing here goes through
// the idempotent representation or the Jacobi kernel.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <utility>

#include "hyplab/random.hpp"

namespace hyplab::oracle {

using Reals = std::array<double, 4>;  // coefficients of 1, i, j, k

// Unit multiplication table: kTable[a][b] = {sign, index} for e_a * e_b.
inline constexpr std::pair<int, int> kTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},     // 1 * (1, i, j, k)
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},   // i * (1, i, j, k): i^2 = -1, ij = k, ik = -j
    {{1, 2}, {1, 3}, {-1, 0}, {-1, 1}},   // j * (1, i, j, k): ji = k, j^2 = -1, jk = -i
    {{1, 3}, {-1, 2}, {-1, 1}, {1, 0}},   // k * (1, i, j, k): ki = -j, kj = -i, k^2 = 1
};

inline Reals mul(const Reals& x, const Reals& y) {
    Reals out{};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const auto [sign, idx] = kTable[a][b];
            out[static_cast<std::size_t>(idx)] += sign * x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
        }
    }
    return out;
}

inline Reals add(const Reals& x, const Reals& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }

inline Reals random_reals(CounterRng& rng) { return {rng.normal(), rng.normal(), rng.normal(), rng.normal()}; }

inline double max_abs_diff(const Reals& x, const Reals& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

inline double max_abs(const Reals& x) {
    double d = 0.0;
    for (double v : x) d = std::max(d, std::abs(v));
    return d;
}

/// Largest eigenvalue of a Hermitian positive semidefinite matrix by power
/// iteration with Rayleigh quotients.
inline double power_top_eigenvalue(const Eigen::MatrixXcd& h, int max_iter = 200000) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(h.rows());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::complex<double>(1.0 + 0.1 * double(i), 0.3 - 0.05 * double(i));
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd w = h * v;
        const double next = v.dot(w).real();
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        v = w / norm;
        if (it > 10 && std::abs(next - lambda) <= 1e-16 * std::abs(next)) return next;
        lambda = next;
    }
    return lambda;
}

/// Gram matrix of the smaller side, whose eigenvalues are the squared singular values.
inline Eigen::MatrixXcd small_gram(const Eigen::MatrixXcd& a) {
    return a.rows() < a.cols() ? Eigen::MatrixXcd(a * a.adjoint()) : Eigen::MatrixXcd(a.adjoint() * a);
}

inline double power_sigma_max(const Eigen::MatrixXcd& a) { return std::sqrt(power_top_eigenvalue(small_gram(a))); }

/// Smallest singular value via power iteration on the shifted Gram matrix
/// s*I - G, which needs no inverse.
inline double power_sigma_min(const Eigen::MatrixXcd& a) {
    const Eigen::MatrixXcd g = small_gram(a);
    const double top = power_top_eigenvalue(g);
    const Eigen::MatrixXcd shifted = top * Eigen::MatrixXcd::Identity(g.rows(), g.cols()) - g;
    const double mu = power_top_eigenvalue(shifted);
    return std::sqrt(std::max(0.0, top - mu));
}

/// Minimum-norm solution of a full-row-rank system through the normal
/// equations A A^H u = y, x = A^H u.
inline Eigen::VectorXcd normal_equations_solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& y) {
    const Eigen::MatrixXcd gram = a * a.adjoint();
    const Eigen::VectorXcd u = gram.llt().solve(y);
    return a.adjoint() * u;
}

/// sigma_min of a full-row-rank matrix from the spectrum of A A^H.
inline double normal_equations_sigma_min(const Eigen::MatrixXcd& a) {
    const Eigen::MatrixXcd gram = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(eig.eigenvalues()(0));
}

inline Eigen::VectorXcd random_unit(CounterRng& rng, Eigen::Index n) {
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = std::complex<double>(rng.normal(), rng.normal());
    return v / v.norm();
}

/// Best ||A v|| over `samples` random unit vectors; returns the value and the maximizer.
inline std::pair<double, Eigen::VectorXcd> monte_carlo_sup(const Eigen::MatrixXcd& a, int samples, CounterRng& rng) {
    double best = -1.0;
    Eigen::VectorXcd arg;
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXcd v = random_unit(rng, a.cols());
        const double val = (a * v).norm();
        if (val > best) {
            best = val;
            arg = std::move(v);
        }
    }
    return {best, arg};
}

/// Random-perturbation hill climbing from a starting unit vector with a
/// shrinking step; a derivative-free refinement of the sampled supremum.
inline double hill_climb_sup(const Eigen::MatrixXcd& a, Eigen::VectorXcd v, CounterRng& rng, int steps = 20000) {
    double best = (a * v).norm();
    double step = 0.5;
    for (int s = 0; s < steps; ++s) {
        Eigen::VectorXcd trial = v + step * random_unit(rng, a.cols());
        trial.normalize();
        const double val = (a * trial).norm();
        if (val > best) {
            best = val;
            v = std::move(trial);
        } else {
            step = std::max(step * 0.999, 1e-9);
        }
    }
    return best;
}

}  // namespace hyplab::oracle
