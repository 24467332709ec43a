#pragma once

// Elements of BC^n and BC-linear maps BC^cols -> BC^rows, each held as its
// pair of complex idempotent components.

#include <Eigen/Dense>
#include <cstddef>
#include <span>

#include "hyplab/hyperscalar.hpp"

namespace hyplab {

class BCVector {
public:
    BCVector() = default;
    /// Throws DimensionMismatch on unequal or zero lengths, NonFinite on NaN/Inf.
    BCVector(Eigen::VectorXcd v1, Eigen::VectorXcd v2);

    static BCVector zero(std::size_t dim);
    static BCVector from_scalars(std::span<const Bicomplex> entries);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(v1_.size()); }
    const Eigen::VectorXcd& v1() const noexcept { return v1_; }
    const Eigen::VectorXcd& v2() const noexcept { return v2_; }
    Bicomplex operator[](std::size_t i) const;

    friend BCVector operator+(const BCVector& x, const BCVector& y);
    friend BCVector operator-(const BCVector& x, const BCVector& y);
    friend BCVector operator*(const Bicomplex& mu, const BCVector& x);
    friend BCVector operator*(double s, const BCVector& x);
    friend bool operator==(const BCVector& x, const BCVector& y);

private:
    Eigen::VectorXcd v1_;
    Eigen::VectorXcd v2_;
};

class BCMatrix {
public:
    BCMatrix() = default;
    /// Throws ShapeMismatch on unequal or empty shapes, NonFinite on NaN/Inf.
    BCMatrix(Eigen::MatrixXcd m1, Eigen::MatrixXcd m2);

    static BCMatrix identity(std::size_t n);
    static BCMatrix zero(std::size_t rows, std::size_t cols);
    /// Diagonal matrix with the given bicomplex entries.
    static BCMatrix diagonal(std::span<const Bicomplex> entries);

    std::size_t rows() const noexcept { return static_cast<std::size_t>(m1_.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(m1_.cols()); }
    const Eigen::MatrixXcd& m1() const noexcept { return m1_; }
    const Eigen::MatrixXcd& m2() const noexcept { return m2_; }
    Bicomplex operator()(std::size_t r, std::size_t c) const;

    friend BCMatrix operator*(double s, const BCMatrix& t);

private:
    Eigen::MatrixXcd m1_;
    Eigen::MatrixXcd m2_;
};

/// Componentwise product (m1*v1, m2*v2). Throws DimensionMismatch.
BCVector mat_apply(const BCMatrix& t, const BCVector& x);

inline BCVector operator*(const BCMatrix& t, const BCVector& x) { return mat_apply(t, x); }

}  // namespace hyplab
