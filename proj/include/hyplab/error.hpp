#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyplab {

enum class ErrorKind {
    NonFinite,
    ZeroDivisor,
    NotStrictlyPositive,
    EmptySet,
    DimensionMismatch,
    ShapeMismatch,
    UnsupportedNorm,
    InvalidInput,
    NotConverged,
    NoConvergence,
    NotInRange,
    NotSurjective,
    HypothesisFailed,
    PreconditionViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hyplab
