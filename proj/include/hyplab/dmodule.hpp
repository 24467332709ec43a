#pragma once

// D-valued norms and seminorms on BC^n, and truncated series summation.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "hyplab/bclinear.hpp"
#include "hyplab/error.hpp"
#include "hyplab/hyperscalar.hpp"

namespace hyplab {

enum class ComponentNorm { L2, L1, LInf };

std::string_view to_string(ComponentNorm norm) noexcept;
ComponentNorm parse_component_norm(std::string_view name);

/// The norm applied to each complex component vector. Both components of a
/// space share it.
struct DNormConfig {
    ComponentNorm component = ComponentNorm::L2;
};

/// Closure tolerance standing in for topological closure of V_alpha.
inline constexpr double kClosureTol = 1e-9;

double component_norm(const Eigen::VectorXcd& v, ComponentNorm norm);

/// e1*N(v1) + e2*N(v2).
DPlus vec_dnorm(const BCVector& v, DNormConfig cfg = {});

/// The hyperbolic seminorm x -> ||Tx||_D.
struct DSeminorm {
    BCMatrix op;
    DNormConfig codomain{};

    DPlus operator()(const BCVector& x) const;
};

/// Throws DimensionMismatch when dim(x) != cols(T).
DPlus seminorm_eval(const DSeminorm& p, const BCVector& x);

/// x in V_alpha = {x : p(x) <= alpha}, exact cone comparison.
bool v_alpha_member(const DSeminorm& p, const BCVector& x, const DPlus& alpha);

/// Tolerance stand-in for the closure of V_alpha: p(x) <= alpha + tol*(1,1).
bool v_alpha_closure_member(const DSeminorm& p, const BCVector& x, const DPlus& alpha, double tol = kClosureTol);

/// Term k (k = 0, 1, ...) of a sequence, or nullopt when a finite sequence ends.
using TermSource = std::function<std::optional<BCVector>(std::size_t)>;

TermSource finite_terms(std::vector<BCVector> terms);
/// Terms ratio^k * seed for k >= 0.
TermSource geometric_terms(const Bicomplex& ratio, BCVector seed);

struct SeriesOptions {
    /// Strictly positive; the trailing-window norm budget below which the sum is accepted.
    DPlus tol = DPlus::real(1e-15);
    std::size_t max_terms = 1000;
    /// Number of trailing terms whose norms must together fall below tol.
    std::size_t window = 3;
    /// Relative tolerance of the Cauchy-chain replay.
    double chain_tol = 1e-12;
};

struct SeriesReport {
    std::size_t terms_used = 0;
    /// s_1, ..., s_N.
    std::vector<BCVector> partial_sums;
    /// Running sums of ||x_k||_D, aligned with partial_sums.
    std::vector<DPlus> abs_sums;
    bool converged = false;
    std::optional<BCVector> limit;
    /// Sum of the trailing window of term norms at the last step.
    DPlus tail_estimate;
    DPlus tol;

    // Filled by abs_summability_check only.
    bool abs_converged = false;
    std::size_t cauchy_pairs_checked = 0;
    /// Worst componentwise value of ||s_n - s_m||_D - sum_{m<k<=n} ||x_k||_D.
    Hyperbolic cauchy_margin;
    bool cauchy_chain_ok = false;
};

/// Raised when the term cap is hit before the tail budget is met; carries the report.
class SeriesNotConverged : public Error {
public:
    explicit SeriesNotConverged(SeriesReport report);
    const SeriesReport& report() const noexcept { return report_; }

private:
    SeriesReport report_;
};

/// Accumulates partial sums until the trailing window of term norms is below
/// opts.tol (or a finite source ends). Convergence is always "at this cap with
/// this tolerance". Throws SeriesNotConverged or DimensionMismatch.
SeriesReport series_sum(const TermSource& terms, const SeriesOptions& opts = {});

/// Checks that sum ||x_k||_D settles at the cap and replays the Cauchy chain
/// ||s_n - s_m||_D <= sum_{k=m+1}^{n} ||x_k||_D for every pair m < n.
/// Non-convergence is reported through abs_converged, not thrown.
SeriesReport abs_summability_check(const TermSource& terms, const SeriesOptions& opts = {});

}  // namespace hyplab
