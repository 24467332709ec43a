#pragma once

// BC-linear operators on BC^n with the l2 D-norm on both sides.
//
// Everything here decouples over the idempotent components: the operator
// D-norm, the minimum-norm preimage and the open-mapping constant are each
// the pair of the corresponding complex quantities for m1 and m2.

#include <cstddef>
#include <string>

#include "hyplab/bclinear.hpp"
#include "hyplab/dmodule.hpp"
#include "hyplab/svd.hpp"

namespace hyplab {

/// Default relative rank cutoff: sigma > 1e-10 * sigma_max counts as nonzero.
inline constexpr double kRankTol = 1e-10;

struct OperatorNormReport {
    /// Least M with ||Tx||_D <= M ||x||_D.
    DPlus m;
    double sigma_max1 = 0.0;
    double sigma_max2 = 0.0;
    std::string method = "full-decomposition";
    int iterations = 0;
    double tol = 0.0;
};

struct SolveReport {
    /// Minimum-norm preimage of y.
    BCVector x;
    /// Quotient seminorm q(y) = ||x||_D.
    DPlus qy;
    /// ||Tx - y||_D.
    DPlus residual;
};

struct SurjectivityReport {
    bool surjective = false;
    std::size_t rows = 0;
    std::size_t rank1 = 0;
    std::size_t rank2 = 0;
};

struct ComponentSvd {
    Svd c1;
    Svd c2;
};

ComponentSvd component_svd(const BCMatrix& t);

/// e1*sigma_max(m1) + e2*sigma_max(m2).
OperatorNormReport op_dnorm(const BCMatrix& t, double tol = kRankTol);

/// The seminorm's Lipschitz constant, op_dnorm of its operator. Throws
/// UnsupportedNorm for non-l2 codomains.
DPlus seminorm_bound(const DSeminorm& p, double tol = kRankTol);

/// Unit vector (||x||_D = (1,1)) built from each component's top right
/// singular vector; ||Tx||_D equals op_dnorm(T).m.
BCVector norm_witness(const BCMatrix& t);

/// Per-component minimum-norm least-squares solution. Throws NotInRange when
/// either residual exceeds tol * max(1, ||y_c||), DimensionMismatch on shape.
SolveReport min_norm_solve(const BCMatrix& t, const BCVector& y, double tol = kRankTol);

/// Both components of full row rank (singular values > tol * sigma_max).
SurjectivityReport surjectivity_check(const BCMatrix& t, double tol = kRankTol);

/// e1/sigma_min(m1) + e2/sigma_min(m2): every y has a preimage x with
/// ||x||_D <= delta ||y||_D. Throws NotSurjective.
DPlus open_mapping_delta(const BCMatrix& t, double tol = kRankTol);

/// Unit vector y (||y||_D = (1,1)) from each component's bottom left singular
/// vector; its minimum-norm preimage has ||x||_D = open_mapping_delta(T).
BCVector open_mapping_witness(const BCMatrix& t);

}  // namespace hyplab
