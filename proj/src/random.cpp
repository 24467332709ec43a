#include "hyplab/random.hpp"

namespace hyplab {

namespace {

Eigen::VectorXcd normal_vector(CounterRng& rng, std::size_t dim) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = random_complex(rng);
    return v;
}

Eigen::VectorXcd unit_sphere(CounterRng& rng, std::size_t dim) {
    Eigen::VectorXcd v = normal_vector(rng, dim);
    double norm = v.norm();
    while (norm == 0.0) {
        v = normal_vector(rng, dim);
        norm = v.norm();
    }
    return v / norm;
}

}  // namespace

Complex random_complex(CounterRng& rng) {
    const double re = rng.normal();
    const double im = rng.normal();
    return {re, im};
}

Bicomplex random_bicomplex(CounterRng& rng) {
    const Complex z1 = random_complex(rng);
    const Complex z2 = random_complex(rng);
    return {z1, z2};
}

BCVector random_vector(CounterRng& rng, std::size_t dim) {
    Eigen::VectorXcd v1 = normal_vector(rng, dim);
    Eigen::VectorXcd v2 = normal_vector(rng, dim);
    return {std::move(v1), std::move(v2)};
}

BCMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols) {
    const auto r = static_cast<Eigen::Index>(rows);
    const auto c = static_cast<Eigen::Index>(cols);
    Eigen::MatrixXcd m1(r, c), m2(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) m1(i, j) = random_complex(rng);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) m2(i, j) = random_complex(rng);
    return {std::move(m1), std::move(m2)};
}

BCVector random_unit_vector(CounterRng& rng, std::size_t dim) {
    Eigen::VectorXcd v1 = unit_sphere(rng, dim);
    Eigen::VectorXcd v2 = unit_sphere(rng, dim);
    return {std::move(v1), std::move(v2)};
}

}  // namespace hyplab
