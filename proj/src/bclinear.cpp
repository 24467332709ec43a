#include "hyplab/bclinear.hpp"

#include <string>

#include "hyplab/error.hpp"

namespace hyplab {

namespace {

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.real().allFinite() && m.imag().allFinite();
}

void require_same_dim(const BCVector& x, const BCVector& y) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector dimensions " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
    }
}

}  // namespace

BCVector::BCVector(Eigen::VectorXcd v1, Eigen::VectorXcd v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
    if (v1_.size() != v2_.size() || v1_.size() == 0) {
        throw Error(ErrorKind::DimensionMismatch, "vector components must have equal nonzero length");
    }
    if (!all_finite(v1_) || !all_finite(v2_)) throw Error(ErrorKind::NonFinite, "vector has non-finite entries");
}

BCVector BCVector::zero(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return {Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n)};
}

BCVector BCVector::from_scalars(std::span<const Bicomplex> entries) {
    const auto n = static_cast<Eigen::Index>(entries.size());
    Eigen::VectorXcd v1(n), v2(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v1(i) = entries[static_cast<std::size_t>(i)].z1();
        v2(i) = entries[static_cast<std::size_t>(i)].z2();
    }
    return {std::move(v1), std::move(v2)};
}

Bicomplex BCVector::operator[](std::size_t i) const {
    const auto k = static_cast<Eigen::Index>(i);
    return {v1_(k), v2_(k)};
}

BCVector operator+(const BCVector& x, const BCVector& y) {
    require_same_dim(x, y);
    return {x.v1_ + y.v1_, x.v2_ + y.v2_};
}

BCVector operator-(const BCVector& x, const BCVector& y) {
    require_same_dim(x, y);
    return {x.v1_ - y.v1_, x.v2_ - y.v2_};
}

BCVector operator*(const Bicomplex& mu, const BCVector& x) { return {mu.z1() * x.v1_, mu.z2() * x.v2_}; }

BCVector operator*(double s, const BCVector& x) { return {s * x.v1_, s * x.v2_}; }

bool operator==(const BCVector& x, const BCVector& y) {
    return x.dim() == y.dim() && x.v1_ == y.v1_ && x.v2_ == y.v2_;
}

BCMatrix::BCMatrix(Eigen::MatrixXcd m1, Eigen::MatrixXcd m2) : m1_(std::move(m1)), m2_(std::move(m2)) {
    if (m1_.rows() != m2_.rows() || m1_.cols() != m2_.cols() || m1_.size() == 0) {
        throw Error(ErrorKind::ShapeMismatch, "matrix components must have equal nonempty shapes");
    }
    if (!all_finite(m1_) || !all_finite(m2_)) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
}

BCMatrix BCMatrix::identity(std::size_t n) {
    const auto k = static_cast<Eigen::Index>(n);
    return {Eigen::MatrixXcd::Identity(k, k), Eigen::MatrixXcd::Identity(k, k)};
}

BCMatrix BCMatrix::zero(std::size_t rows, std::size_t cols) {
    const auto r = static_cast<Eigen::Index>(rows);
    const auto c = static_cast<Eigen::Index>(cols);
    return {Eigen::MatrixXcd::Zero(r, c), Eigen::MatrixXcd::Zero(r, c)};
}

BCMatrix BCMatrix::diagonal(std::span<const Bicomplex> entries) {
    const auto n = static_cast<Eigen::Index>(entries.size());
    Eigen::MatrixXcd m1 = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd m2 = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m1(i, i) = entries[static_cast<std::size_t>(i)].z1();
        m2(i, i) = entries[static_cast<std::size_t>(i)].z2();
    }
    return {std::move(m1), std::move(m2)};
}

Bicomplex BCMatrix::operator()(std::size_t r, std::size_t c) const {
    const auto i = static_cast<Eigen::Index>(r);
    const auto j = static_cast<Eigen::Index>(c);
    return {m1_(i, j), m2_(i, j)};
}

BCMatrix operator*(double s, const BCMatrix& t) { return {s * t.m1_, s * t.m2_}; }

BCVector mat_apply(const BCMatrix& t, const BCVector& x) {
    if (t.cols() != x.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix has " + std::to_string(t.cols()) + " columns, vector has dimension " +
                        std::to_string(x.dim()));
    }
    return {t.m1() * x.v1(), t.m2() * x.v2()};
}

}  // namespace hyplab
