#pragma once

// Finite-dimensional replays of the continuity, countable subadditivity,
// ball-scaling, Zabreiko decomposition, uniform boundedness and open mapping
// results for seminorms of the form x -> ||Tx||_D on BC^n.
//
// Every check draws its samples from CounterRng streams keyed by
// (seed, trial index), so a report is a pure function of its inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyplab/dmodule.hpp"
#include "hyplab/dop.hpp"
#include "hyplab/hyperscalar.hpp"

namespace hyplab {

/// Absolute slack used by every replayed inequality.
inline constexpr double kCheckTol = 1e-9;

/// Relative slack on the Zabreiko preconditions 2 alpha* r <= m and ||x||_D <= r.
inline constexpr double kBoundarySlack = 1e-12;

// ---------------------------------------------------------------------------
// Continuity: p(x) <= alpha ||x||_D.

struct ContinuityReport {
    /// Least Lipschitz constant, op_dnorm of the defining operator.
    DPlus alpha_star;
    /// Constant actually checked (alpha_star unless overridden).
    DPlus alpha;
    std::size_t trials = 0;
    /// Worst p(x) - alpha ||x||_D over the witness and all trials.
    Hyperbolic worst_margin;
    bool all_ok = false;
    /// Worst slack of |p(x_n) - p(x)|_k <= p(x_n - x) <= alpha ||x_n - x||_D.
    Hyperbolic worst_sequence_margin;
    bool sequence_check = false;
    /// Top singular vectors attain alpha_star within 1e-8.
    bool witness_tight = false;
};

ContinuityReport continuity_bound_check(const DSeminorm& p, std::size_t trials, std::uint64_t seed,
                                        std::optional<DPlus> alpha_override = std::nullopt,
                                        double tol = kCheckTol);

// ---------------------------------------------------------------------------
// Countable subadditivity: p(sum x_k) <= sum p(x_k).

struct SubadditivityReport {
    std::size_t terms_used = 0;
    /// sum_{k<=N} p(x_k).
    DPlus sum_p;
    /// p at the accepted limit.
    DPlus p_limit;
    /// Worst p(s_n) - sum_{k<=n} p(x_k) over all partial sums.
    Hyperbolic worst_margin;
    bool partial_sums_ok = false;
    bool limit_ok = false;
    bool all_ok = false;
};

/// Throws SeriesNotConverged when the series is not accepted by series_sum.
SubadditivityReport countable_subadd_check(const DSeminorm& p, const TermSource& terms,
                                           const SeriesOptions& opts = {}, double tol = kCheckTol);

// ---------------------------------------------------------------------------
// Ball scaling: B[0, r] in cl V_alpha implies B[0, delta r] in cl V_{delta alpha}.

struct BallScalingEntry {
    double delta = 0.0;
    /// Worst p(x) - delta alpha over samples with ||x||_D <= delta r.
    Hyperbolic worst_margin;
    bool ok = false;
};

struct BallScalingReport {
    DPlus alpha;
    double r = 0.0;
    std::size_t samples = 0;
    Hyperbolic hypothesis_margin;
    std::vector<BallScalingEntry> entries;
    bool all_ok = false;
};

/// Throws HypothesisFailed when some sampled x with ||x||_D <= r is outside
/// the tolerance closure of V_alpha.
BallScalingReport ball_scaling_check(const DSeminorm& p, const DPlus& alpha, double r,
                                     const std::vector<double>& deltas, std::size_t samples, std::uint64_t seed,
                                     double tol = kClosureTol);

// ---------------------------------------------------------------------------
// Zabreiko decomposition x = sum x_k with p(x_k) <= eps_{k-1} m.

struct ZabreikoTrace {
    /// x_1, ..., x_N.
    std::vector<BCVector> x_terms;
    /// u_1, ..., u_N with u_k = u_{k-1} - x_k and u_0 = x.
    std::vector<BCVector> remainders;
    /// eps_0 = ||x||_D / r, eps_k = eps / (m 2^k) for k = 1..N.
    std::vector<DPlus> epsilons;
    /// p(x_1), ..., p(x_N).
    std::vector<DPlus> p_terms;
    /// ||x - sum_{j<=n} x_j||_D for n = 1..N.
    std::vector<DPlus> tail_bounds;
    DPlus m;
    double r = 0.0;
    DPlus eps;
    DPlus alpha_star;
    DPlus p_x;
    /// sum p(x_k) + p(u_N), an upper bound for p(x) by finite subadditivity.
    DPlus budget;
    /// (m / r) ||x||_D + eps.
    DPlus final_bound;
    /// "floor" when the remainder fell below machine resolution, "cap" otherwise.
    std::string stop_reason;
    bool invariants_ok = false;
    bool final_bound_ok = false;
};

struct ZabreikoReplay {
    Hyperbolic p_term_margin;     // max p(x_k) - eps_{k-1} m
    Hyperbolic remainder_margin;  // max ||u_n||_D - eps_n r
    Hyperbolic tail_margin;       // max ||x - sum x_k||_D - (eps r / m) 2^-n
    Hyperbolic final_margin;      // p(x) - ((m/r) ||x||_D + eps)
    bool recursion_exact = false;
    bool p_terms_ok = false;
    bool remainders_ok = false;
    bool tails_ok = false;
    bool final_ok = false;
    bool ok = false;
};

/// Builds the decomposition by truncating each remainder toward zero on a
/// grid of pitch eps_k r / (2 sqrt(n)) per real coordinate. Requires an l2
/// codomain, 2 alpha* r <= m, ||x||_D <= r, r > 0 and m, eps strictly
/// positive; throws PreconditionViolated otherwise.
ZabreikoTrace zabreiko_decompose(const DSeminorm& p, const BCVector& x, const DPlus& m, double r, const DPlus& eps,
                                 std::size_t max_terms = 1000, double tol = kCheckTol);

/// Recomputes every recorded inequality of a trace from p and x.
ZabreikoReplay replay_zabreiko(const ZabreikoTrace& trace, const DSeminorm& p, const BCVector& x,
                               double tol = kCheckTol);

// ---------------------------------------------------------------------------
// Uniform boundedness: p_s(x) <= p*(x) <= delta ||x||_D.

struct UBPReport {
    std::size_t family_size = 0;
    std::size_t sample_count = 0;
    std::vector<DPlus> op_norms;
    /// p*(x) at each sample point; the first sample is the singular-vector witness.
    std::vector<Hyperbolic> pointwise_sups;
    /// hyp_sup of the operator norms.
    DPlus sup_opnorm;
    /// Constant actually checked (sup_opnorm unless overridden).
    DPlus bound_delta;
    /// Worst p_s(x) - p*(x).
    Hyperbolic member_margin;
    /// Worst p*(x) - delta ||x||_D.
    Hyperbolic bound_margin;
    bool members_ok = false;
    bool bounds_ok = false;
    bool all_bounds_ok = false;
};

/// Throws ShapeMismatch for mixed shapes, EmptySet for an empty family.
UBPReport ubp_verify(const std::vector<BCMatrix>& family, std::size_t samples, std::uint64_t seed,
                     std::optional<DPlus> delta_override = std::nullopt, double tol = kCheckTol);

// ---------------------------------------------------------------------------
// Open mapping: every y has x with Tx = y and ||x||_D <= delta ||y||_D.

struct QuotientSeriesCheck {
    std::size_t terms = 0;
    DPlus eps;
    /// sum q(y_k).
    DPlus q_sum;
    /// q(sum y_k).
    DPlus q_of_sum;
    /// sum ||x_k||_D for the chosen preimages.
    DPlus preimage_norm_sum;
    /// q(y) - (sum q(y_k) + eps).
    Hyperbolic margin;
    bool ok = false;
};

struct OpenMappingReport {
    DPlus delta;
    /// Constant actually checked (delta unless overridden).
    DPlus delta_checked;
    std::size_t trials = 0;
    Hyperbolic worst_residual;
    /// Worst ||x||_D - delta ||y||_D.
    Hyperbolic worst_bound_margin;
    bool solves_ok = false;
    bool bounds_ok = false;
    /// ||x||_D / ||y||_D at the bottom singular vector witness.
    DPlus witness_ratio;
    bool delta_minimal = false;
    QuotientSeriesCheck quotient;
    bool all_ok = false;
};

/// Throws NotSurjective.
OpenMappingReport open_mapping_verify(const BCMatrix& t, std::size_t trials, std::uint64_t seed,
                                      std::optional<DPlus> delta_override = std::nullopt,
                                      double tol = kCheckTol);

}  // namespace hyplab
