#include "hyplab/hyperscalar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyplab/error.hpp"

namespace hyplab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::NotStrictlyPositive: return "NotStrictlyPositive";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::UnsupportedNorm: return "UnsupportedNorm";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NotInRange: return "NotInRange";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    }
    return "Unknown";
}

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, std::string(what) + " is not finite");
}

}  // namespace

Hyperbolic::Hyperbolic(double a1, double a2) : a1_(a1), a2_(a2) {
    require_finite(a1, "hyperbolic component a1");
    require_finite(a2, "hyperbolic component a2");
}

DPlus::DPlus(double a1, double a2) : value_(a1, a2) {
    if (!(a1 >= 0.0 && a2 >= 0.0)) {
        throw Error(ErrorKind::InvalidInput,
                    "value (" + std::to_string(a1) + ", " + std::to_string(a2) + ") is outside the D+ cone");
    }
}

Bicomplex::Bicomplex(Complex z1, Complex z2) : z1_(z1), z2_(z2) {
    require_finite(z1.real(), "bicomplex component z1");
    require_finite(z1.imag(), "bicomplex component z1");
    require_finite(z2.real(), "bicomplex component z2");
    require_finite(z2.imag(), "bicomplex component z2");
}

Bicomplex Bicomplex::from_cartesian(Complex w1, Complex w2) {
    const Complex i(0.0, 1.0);
    return {w1 - i * w2, w1 + i * w2};
}

Bicomplex Bicomplex::from_reals(const std::array<double, 4>& r) {
    return from_cartesian(Complex(r[0], r[1]), Complex(r[2], r[3]));
}

std::pair<Complex, Complex> Bicomplex::to_cartesian() const {
    const Complex i(0.0, 1.0);
    return {0.5 * (z1_ + z2_), 0.5 * i * (z1_ - z2_)};
}

std::array<double, 4> Bicomplex::to_reals() const {
    const auto [w1, w2] = to_cartesian();
    return {w1.real(), w1.imag(), w2.real(), w2.imag()};
}

const char* to_string(OrderRel rel) noexcept {
    switch (rel) {
        case OrderRel::Less: return "Less";
        case OrderRel::Equal: return "Equal";
        case OrderRel::Greater: return "Greater";
        case OrderRel::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

Bicomplex inverse(const Bicomplex& z, double zero_tol) {
    if (std::abs(z.z1()) <= zero_tol || std::abs(z.z2()) <= zero_tol) {
        throw Error(ErrorKind::ZeroDivisor, "bicomplex value has a vanishing idempotent component");
    }
    return {1.0 / z.z1(), 1.0 / z.z2()};
}

DPlus knorm(const Bicomplex& z) { return {std::abs(z.z1()), std::abs(z.z2())}; }

double euclid_norm(const Bicomplex& z) {
    return std::sqrt(0.5 * (std::norm(z.z1()) + std::norm(z.z2())));
}

OrderRel compare(const Hyperbolic& x, const Hyperbolic& y) noexcept {
    if (x == y) return OrderRel::Equal;
    if (leq(x, y)) return OrderRel::Less;
    if (leq(y, x)) return OrderRel::Greater;
    return OrderRel::Incomparable;
}

DPlus hyp_abs(const Hyperbolic& x) { return {std::abs(x.a1()), std::abs(x.a2())}; }

DPlus inverse(const DPlus& x) {
    if (!x.is_strictly_positive()) {
        throw Error(ErrorKind::NotStrictlyPositive, "reciprocal requires both components > 0");
    }
    return {1.0 / x.a1(), 1.0 / x.a2()};
}

Hyperbolic hyp_sup(std::span<const Hyperbolic> values) {
    if (values.empty()) throw Error(ErrorKind::EmptySet, "supremum of an empty set");
    double a1 = values.front().a1();
    double a2 = values.front().a2();
    for (const auto& v : values.subspan(1)) {
        a1 = std::max(a1, v.a1());
        a2 = std::max(a2, v.a2());
    }
    return {a1, a2};
}

Hyperbolic hyp_inf(std::span<const Hyperbolic> values) {
    if (values.empty()) throw Error(ErrorKind::EmptySet, "infimum of an empty set");
    double a1 = values.front().a1();
    double a2 = values.front().a2();
    for (const auto& v : values.subspan(1)) {
        a1 = std::min(a1, v.a1());
        a2 = std::min(a2, v.a2());
    }
    return {a1, a2};
}

}  // namespace hyplab
