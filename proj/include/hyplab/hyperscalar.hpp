#pragma once

// Hyperbolic and bicomplex scalars.
//
// Both are stored in idempotent coordinates: a value is e1*a1 + e2*a2 with
// e1 = (1+k)/2 and e2 = (1-k)/2. Since e1*e2 = 0, every product, norm and
// inverse acts on the two components independently. Cartesian forms are
// conversions only.

#include <array>
#include <complex>
#include <span>
#include <utility>

namespace hyplab {

using Complex = std::complex<double>;

/// Absolute floor below which an idempotent component counts as zero.
inline constexpr double kZeroDivisorTol = 1e-300;

/// A hyperbolic number b1 + k*b2 = e1*a1 + e2*a2 with a1 = b1+b2, a2 = b1-b2.
class Hyperbolic {
public:
    Hyperbolic() = default;
    Hyperbolic(double a1, double a2);

    static Hyperbolic real(double v) { return {v, v}; }
    static Hyperbolic from_cartesian(double b1, double b2) { return {b1 + b2, b1 - b2}; }

    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }
    double b1() const noexcept { return 0.5 * (a1_ + a2_); }
    double b2() const noexcept { return 0.5 * (a1_ - a2_); }

    friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;

private:
    double a1_ = 0.0;
    double a2_ = 0.0;
};

// Namespace-scope so DPlus operands reach them through the implicit conversion.
inline Hyperbolic operator+(const Hyperbolic& x, const Hyperbolic& y) { return {x.a1() + y.a1(), x.a2() + y.a2()}; }
inline Hyperbolic operator-(const Hyperbolic& x, const Hyperbolic& y) { return {x.a1() - y.a1(), x.a2() - y.a2()}; }
inline Hyperbolic operator*(const Hyperbolic& x, const Hyperbolic& y) { return {x.a1() * y.a1(), x.a2() * y.a2()}; }
inline Hyperbolic operator*(double s, const Hyperbolic& x) { return {s * x.a1(), s * x.a2()}; }
inline Hyperbolic operator-(const Hyperbolic& x) { return {-x.a1(), -x.a2()}; }

/// A hyperbolic number in the nonnegative cone D+ (both components >= 0).
/// All D-valued norms and seminorms return this type.
class DPlus {
public:
    DPlus() = default;
    DPlus(double a1, double a2);
    explicit DPlus(const Hyperbolic& h) : DPlus(h.a1(), h.a2()) {}

    static DPlus real(double v) { return {v, v}; }
    static DPlus one() { return {1.0, 1.0}; }

    double a1() const noexcept { return value_.a1(); }
    double a2() const noexcept { return value_.a2(); }
    const Hyperbolic& value() const noexcept { return value_; }
    operator const Hyperbolic&() const noexcept { return value_; }

    bool is_zero() const noexcept { return a1() == 0.0 && a2() == 0.0; }
    bool is_strictly_positive() const noexcept { return a1() > 0.0 && a2() > 0.0; }

    friend DPlus operator+(const DPlus& x, const DPlus& y) { return {x.a1() + y.a1(), x.a2() + y.a2()}; }
    friend DPlus operator*(const DPlus& x, const DPlus& y) { return {x.a1() * y.a1(), x.a2() * y.a2()}; }
    friend DPlus operator*(double s, const DPlus& x) { return {s * x.a1(), s * x.a2()}; }
    friend bool operator==(const DPlus&, const DPlus&) = default;

private:
    Hyperbolic value_;
};

/// A bicomplex number Z = w1 + j*w2 = e1*z1 + e2*z2, z1 = w1 - i*w2, z2 = w1 + i*w2.
class Bicomplex {
public:
    Bicomplex() = default;
    Bicomplex(Complex z1, Complex z2);
    Bicomplex(const Hyperbolic& h) : z1_(h.a1()), z2_(h.a2()) {}  // NOLINT: D is a subring of BC

    static Bicomplex from_cartesian(Complex w1, Complex w2);
    /// a + b*i + c*j + d*k
    static Bicomplex from_reals(const std::array<double, 4>& r);

    static Bicomplex zero() { return {}; }
    static Bicomplex one() { return {1.0, 1.0}; }
    static Bicomplex unit_i() { return {Complex(0, 1), Complex(0, 1)}; }
    static Bicomplex unit_j() { return {Complex(0, -1), Complex(0, 1)}; }
    static Bicomplex unit_k() { return {1.0, -1.0}; }
    static Bicomplex e1() { return {1.0, 0.0}; }
    static Bicomplex e2() { return {0.0, 1.0}; }

    const Complex& z1() const noexcept { return z1_; }
    const Complex& z2() const noexcept { return z2_; }

    /// (w1, w2) with Z = w1 + j*w2.
    std::pair<Complex, Complex> to_cartesian() const;
    /// Coefficients of (1, i, j, k).
    std::array<double, 4> to_reals() const;

    friend Bicomplex operator+(const Bicomplex& x, const Bicomplex& y) { return {x.z1_ + y.z1_, x.z2_ + y.z2_}; }
    friend Bicomplex operator-(const Bicomplex& x, const Bicomplex& y) { return {x.z1_ - y.z1_, x.z2_ - y.z2_}; }
    friend Bicomplex operator*(const Bicomplex& x, const Bicomplex& y) { return {x.z1_ * y.z1_, x.z2_ * y.z2_}; }
    friend Bicomplex operator*(double s, const Bicomplex& x) { return {s * x.z1_, s * x.z2_}; }
    friend Bicomplex operator-(const Bicomplex& x) { return {-x.z1_, -x.z2_}; }
    friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

private:
    Complex z1_{};
    Complex z2_{};
};

enum class OrderRel { Less, Equal, Greater, Incomparable };

const char* to_string(OrderRel rel) noexcept;

/// Componentwise reciprocal. Throws ZeroDivisor when either component has
/// modulus <= zero_tol (Z is zero or a zero divisor).
Bicomplex inverse(const Bicomplex& z, double zero_tol = kZeroDivisorTol);

/// Hyperbolic-valued modulus e1|z1| + e2|z2|.
DPlus knorm(const Bicomplex& z);

/// Euclidean modulus of the 4-real coefficient vector, sqrt((|z1|^2 + |z2|^2) / 2).
double euclid_norm(const Bicomplex& z);

/// Partial order of the D+ cone: x <= y iff y - x is in D+.
OrderRel compare(const Hyperbolic& x, const Hyperbolic& y) noexcept;

inline bool leq(const Hyperbolic& x, const Hyperbolic& y) noexcept {
    return x.a1() <= y.a1() && x.a2() <= y.a2();
}

/// Strict order in both components; the cone interior.
inline bool strictly_less(const Hyperbolic& x, const Hyperbolic& y) noexcept {
    return x.a1() < y.a1() && x.a2() < y.a2();
}

/// x <= y + tol*(1,1)
inline bool leq_within(const Hyperbolic& x, const Hyperbolic& y, double tol) noexcept {
    return x.a1() <= y.a1() + tol && x.a2() <= y.a2() + tol;
}

DPlus hyp_abs(const Hyperbolic& x);

/// Componentwise reciprocal of a strictly positive cone element.
DPlus inverse(const DPlus& x);

/// Least upper bound under the cone order; componentwise maximum.
Hyperbolic hyp_sup(std::span<const Hyperbolic> values);
/// Greatest lower bound under the cone order; componentwise minimum.
Hyperbolic hyp_inf(std::span<const Hyperbolic> values);

inline Hyperbolic hyp_max(const Hyperbolic& x, const Hyperbolic& y) {
    const Hyperbolic pair[] = {x, y};
    return hyp_sup(pair);
}

}  // namespace hyplab
