#include "hyplab/theoremlab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <limits>
#include <string>

#include "hyplab/error.hpp"
#include "hyplab/random.hpp"

namespace hyplab {

namespace {

// Worst componentwise value of lhs - rhs seen so far.
class WorstMargin {
public:
    void update(const Hyperbolic& lhs, const Hyperbolic& rhs) {
        a1_ = std::max(a1_, lhs.a1() - rhs.a1());
        a2_ = std::max(a2_, lhs.a2() - rhs.a2());
        seen_ = true;
    }
    Hyperbolic value() const { return seen_ ? Hyperbolic(a1_, a2_) : Hyperbolic(); }
    bool within(double tol) const { return a1_ <= tol && a2_ <= tol; }

private:
    double a1_ = std::numeric_limits<double>::lowest();
    double a2_ = std::numeric_limits<double>::lowest();
    bool seen_ = false;
};

// Stream offsets keep the draws of different phases of one check disjoint.
constexpr std::uint64_t kSequenceStream = 1ULL << 32;
constexpr std::uint64_t kSeriesStream = 2ULL << 32;

// A point drawn uniformly from the D-ball of the given radius: each component
// independently uniform in the real 2n-dimensional ball.
BCVector sample_ball(CounterRng& rng, std::size_t dim, double radius) {
    const BCVector dir = random_unit_vector(rng, dim);
    const double exponent = 1.0 / (2.0 * static_cast<double>(dim));
    const double rho1 = radius * std::pow(rng.uniform(), exponent);
    const double rho2 = radius * std::pow(rng.uniform(), exponent);
    return Bicomplex(Complex(rho1), Complex(rho2)) * dir;
}

DPlus hyp_abs_diff(const DPlus& x, const DPlus& y) { return hyp_abs(x.value() - y.value()); }

}  // namespace

ContinuityReport continuity_bound_check(const DSeminorm& p, std::size_t trials, std::uint64_t seed,
                                        std::optional<DPlus> alpha_override, double tol) {
    if (trials < 1) throw Error(ErrorKind::InvalidInput, "continuity check needs at least one trial");
    ContinuityReport report;
    report.alpha_star = seminorm_bound(p);
    report.alpha = alpha_override.value_or(report.alpha_star);
    report.trials = trials;
    const std::size_t dim = p.op.cols();

    WorstMargin bound;
    const BCVector witness = norm_witness(p.op);
    const DPlus p_witness = p(witness);
    bound.update(p_witness, report.alpha * vec_dnorm(witness));
    const double tight1 = 1e-8 * std::max(1.0, report.alpha_star.a1());
    const double tight2 = 1e-8 * std::max(1.0, report.alpha_star.a2());
    report.witness_tight = std::abs(p_witness.a1() - report.alpha_star.a1()) <= tight1 &&
                           std::abs(p_witness.a2() - report.alpha_star.a2()) <= tight2;

    WorstMargin sequence;
    for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng(seed, t);
        const BCVector x = random_vector(rng, dim);
        const DPlus px = p(x);
        bound.update(px, report.alpha * vec_dnorm(x));

        // x_n = x + 2^-n d converges to x; replay the Lipschitz chain along it.
        CounterRng seq_rng(seed, kSequenceStream + t);
        const BCVector d = random_vector(seq_rng, dim);
        double step = 1.0;
        for (int n = 1; n <= 10; ++n) {
            step *= 0.5;
            const BCVector xn = x + step * d;
            const BCVector diff = xn - x;
            const DPlus p_diff = p(diff);
            sequence.update(hyp_abs_diff(p(xn), px), p_diff);
            sequence.update(p_diff, report.alpha * vec_dnorm(diff));
        }
    }
    report.worst_margin = bound.value();
    report.all_ok = bound.within(tol);
    report.worst_sequence_margin = sequence.value();
    report.sequence_check = sequence.within(tol);
    return report;
}

SubadditivityReport countable_subadd_check(const DSeminorm& p, const TermSource& terms, const SeriesOptions& opts,
                                           double tol) {
    const SeriesReport series = series_sum(terms, opts);
    SubadditivityReport report;
    report.terms_used = series.terms_used;

    WorstMargin partial;
    DPlus sum_p;
    for (std::size_t k = 0; k < series.terms_used; ++k) {
        const BCVector term = k == 0 ? series.partial_sums[0] : series.partial_sums[k] - series.partial_sums[k - 1];
        sum_p = sum_p + p(term);
        partial.update(p(series.partial_sums[k]), sum_p);
    }
    report.sum_p = sum_p;
    report.p_limit = p(*series.limit);
    report.worst_margin = partial.value();
    report.partial_sums_ok = partial.within(tol);
    report.limit_ok = leq_within(report.p_limit, sum_p, tol);
    report.all_ok = report.partial_sums_ok && report.limit_ok;
    return report;
}

BallScalingReport ball_scaling_check(const DSeminorm& p, const DPlus& alpha, double r,
                                     const std::vector<double>& deltas, std::size_t samples, std::uint64_t seed,
                                     double tol) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidInput, "radius must be positive and finite");
    if (samples < 1) throw Error(ErrorKind::InvalidInput, "ball scaling needs at least one sample");
    for (const double d : deltas) {
        if (!(d > 0.0) || !std::isfinite(d)) throw Error(ErrorKind::InvalidInput, "scaling factors must be positive");
    }
    BallScalingReport report;
    report.alpha = alpha;
    report.r = r;
    report.samples = samples;
    const std::size_t dim = p.op.cols();
    const BCVector witness = norm_witness(p.op);

    // Sample set for radius rho: the top singular witness on the sphere plus
    // uniform draws from the ball.
    const auto worst_over_ball = [&](double rho, const DPlus& level) {
        WorstMargin worst;
        worst.update(p(rho * witness), level);
        for (std::size_t s = 0; s < samples; ++s) {
            CounterRng rng(seed, s);
            worst.update(p(sample_ball(rng, dim, rho)), level);
        }
        return worst;
    };

    const WorstMargin hypothesis = worst_over_ball(r, alpha);
    report.hypothesis_margin = hypothesis.value();
    if (!hypothesis.within(tol)) {
        throw Error(ErrorKind::HypothesisFailed,
                    (std::ostringstream() << "B[0, r] is not inside the closure of V_alpha (margin "
                                           << report.hypothesis_margin.a1() << ", "
                                           << report.hypothesis_margin.a2() << ")")
                        .str());
    }

    report.all_ok = true;
    for (const double d : deltas) {
        const WorstMargin worst = worst_over_ball(d * r, d * alpha);
        BallScalingEntry entry{d, worst.value(), worst.within(tol)};
        report.all_ok = report.all_ok && entry.ok;
        report.entries.push_back(entry);
    }
    return report;
}

namespace {

// Truncates each real coordinate toward zero on a grid of the given pitch.
// A pitch too small to represent keeps the coordinate whole.
Eigen::VectorXcd truncate_to_grid(const Eigen::VectorXcd& u, double pitch) {
    if (!(pitch >= std::numeric_limits<double>::min())) return u;
    Eigen::VectorXcd out(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        out(i) = Complex(pitch * std::trunc(u(i).real() / pitch), pitch * std::trunc(u(i).imag() / pitch));
    }
    return out;
}

}  // namespace

ZabreikoTrace zabreiko_decompose(const DSeminorm& p, const BCVector& x, const DPlus& m, double r, const DPlus& eps,
                                 std::size_t max_terms, double tol) {
    if (max_terms < 1) throw Error(ErrorKind::InvalidInput, "term cap must be at least 1");
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::PreconditionViolated, "r must be positive");
    if (!m.is_strictly_positive()) throw Error(ErrorKind::PreconditionViolated, "m must be strictly positive");
    if (!eps.is_strictly_positive()) throw Error(ErrorKind::PreconditionViolated, "eps must be strictly positive");
    if (x.dim() != p.op.cols()) throw Error(ErrorKind::DimensionMismatch, "x does not match the operator domain");

    ZabreikoTrace trace;
    trace.m = m;
    trace.r = r;
    trace.eps = eps;
    trace.alpha_star = seminorm_bound(p);
    // Relative slack so that instances built exactly on a boundary survive rounding.
    const double slack = 1.0 + kBoundarySlack;
    const DPlus needed = (2.0 * r) * trace.alpha_star;
    const bool bad1 = needed.a1() > slack * m.a1();
    const bool bad2 = needed.a2() > slack * m.a2();
    if (bad1 || bad2) {
        const std::string which = bad1 && bad2 ? "e1 and e2" : bad1 ? "e1" : "e2";
        throw Error(ErrorKind::PreconditionViolated, "2 alpha* r <= m fails in component " + which);
    }
    const DPlus x_norm = vec_dnorm(x);
    if (x_norm.a1() > slack * r || x_norm.a2() > slack * r) {
        throw Error(ErrorKind::PreconditionViolated, "||x||_D exceeds r");
    }

    const double grid_scale = r / (2.0 * std::sqrt(static_cast<double>(x.dim())));
    const DPlus eps_over_m = eps * inverse(m);
    const double floor1 = std::numeric_limits<double>::epsilon() * x_norm.a1();
    const double floor2 = std::numeric_limits<double>::epsilon() * x_norm.a2();

    trace.epsilons.push_back((1.0 / r) * x_norm);
    BCVector remainder = x;
    BCVector partial = BCVector::zero(x.dim());
    double scale = 1.0;
    trace.stop_reason = "cap";
    for (std::size_t k = 1; k <= max_terms; ++k) {
        scale *= 0.5;
        const DPlus eps_k = scale * eps_over_m;
        trace.epsilons.push_back(eps_k);
        BCVector term(truncate_to_grid(remainder.v1(), eps_k.a1() * grid_scale),
                      truncate_to_grid(remainder.v2(), eps_k.a2() * grid_scale));
        remainder = remainder - term;
        partial = partial + term;
        trace.p_terms.push_back(p(term));
        trace.tail_bounds.push_back(vec_dnorm(x - partial));
        trace.x_terms.push_back(std::move(term));
        trace.remainders.push_back(remainder);

        const DPlus u_norm = vec_dnorm(remainder);
        if (u_norm.a1() <= floor1 && u_norm.a2() <= floor2) {
            trace.stop_reason = "floor";
            break;
        }
    }

    trace.p_x = p(x);
    DPlus budget = p(trace.remainders.back());
    for (const auto& pk : trace.p_terms) budget = budget + pk;
    trace.budget = budget;
    trace.final_bound = (1.0 / r) * (m * x_norm) + eps;

    const ZabreikoReplay replay = replay_zabreiko(trace, p, x, tol);
    trace.invariants_ok = replay.recursion_exact && replay.p_terms_ok && replay.remainders_ok && replay.tails_ok;
    trace.final_bound_ok = replay.final_ok && leq_within(trace.p_x, trace.budget, tol) &&
                           leq_within(trace.budget, trace.final_bound, tol);
    return trace;
}

ZabreikoReplay replay_zabreiko(const ZabreikoTrace& trace, const DSeminorm& p, const BCVector& x, double tol) {
    ZabreikoReplay replay;
    const std::size_t n_terms = trace.x_terms.size();
    if (n_terms == 0 || trace.remainders.size() != n_terms || trace.epsilons.size() != n_terms + 1) {
        throw Error(ErrorKind::InvalidInput, "malformed Zabreiko trace");
    }

    replay.recursion_exact = true;
    WorstMargin p_terms, remainders, tails;
    BCVector previous = x;
    BCVector partial = BCVector::zero(x.dim());
    const DPlus eps_r_over_m = trace.r * (trace.eps * inverse(trace.m));
    double scale = 1.0;
    for (std::size_t k = 1; k <= n_terms; ++k) {
        const BCVector& term = trace.x_terms[k - 1];
        const BCVector& u = trace.remainders[k - 1];
        if (!(previous - term == u)) replay.recursion_exact = false;
        p_terms.update(p(term), trace.epsilons[k - 1] * trace.m);
        remainders.update(vec_dnorm(u), trace.r * trace.epsilons[k]);
        partial = partial + term;
        scale *= 0.5;
        tails.update(vec_dnorm(x - partial), scale * eps_r_over_m);
        previous = u;
    }
    replay.p_term_margin = p_terms.value();
    replay.remainder_margin = remainders.value();
    replay.tail_margin = tails.value();
    replay.p_terms_ok = p_terms.within(tol);
    replay.remainders_ok = remainders.within(tol);
    replay.tails_ok = tails.within(tol);

    const DPlus final_bound = (1.0 / trace.r) * (trace.m * vec_dnorm(x)) + trace.eps;
    replay.final_margin = p(x).value() - final_bound.value();
    replay.final_ok = leq_within(p(x), final_bound, tol);
    replay.ok = replay.recursion_exact && replay.p_terms_ok && replay.remainders_ok && replay.tails_ok &&
                replay.final_ok;
    return replay;
}

UBPReport ubp_verify(const std::vector<BCMatrix>& family, std::size_t samples, std::uint64_t seed,
                     std::optional<DPlus> delta_override, double tol) {
    if (family.empty()) throw Error(ErrorKind::EmptySet, "operator family is empty");
    const std::size_t rows = family.front().rows();
    const std::size_t cols = family.front().cols();
    for (const auto& t : family) {
        if (t.rows() != rows || t.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "family shapes differ");
    }

    UBPReport report;
    report.family_size = family.size();
    std::vector<Hyperbolic> norms;
    std::size_t arg1 = 0, arg2 = 0;
    for (std::size_t s = 0; s < family.size(); ++s) {
        report.op_norms.push_back(op_dnorm(family[s]).m);
        norms.push_back(report.op_norms.back());
        if (report.op_norms[s].a1() > report.op_norms[arg1].a1()) arg1 = s;
        if (report.op_norms[s].a2() > report.op_norms[arg2].a2()) arg2 = s;
    }
    report.sup_opnorm = DPlus(hyp_sup(norms));
    report.bound_delta = delta_override.value_or(report.sup_opnorm);

    // Witness: each component's top right singular vector of the operator that
    // attains the supremum in that component.
    std::vector<BCVector> points;
    points.emplace_back(norm_witness(family[arg1]).v1(), norm_witness(family[arg2]).v2());
    for (std::size_t i = 0; i < samples; ++i) {
        CounterRng rng(seed, i);
        points.push_back(random_vector(rng, cols));
    }
    report.sample_count = points.size();

    WorstMargin members, bounds;
    std::vector<Hyperbolic> values(family.size());
    for (const auto& x : points) {
        for (std::size_t s = 0; s < family.size(); ++s) values[s] = vec_dnorm(mat_apply(family[s], x));
        const Hyperbolic sup = hyp_sup(values);
        for (const auto& v : values) members.update(v, sup);
        bounds.update(sup, report.bound_delta * vec_dnorm(x));
        report.pointwise_sups.push_back(sup);
    }
    report.member_margin = members.value();
    report.bound_margin = bounds.value();
    report.members_ok = members.within(tol);
    report.bounds_ok = bounds.within(tol);
    report.all_bounds_ok = report.members_ok && report.bounds_ok;
    return report;
}

OpenMappingReport open_mapping_verify(const BCMatrix& t, std::size_t trials, std::uint64_t seed,
                                      std::optional<DPlus> delta_override, double tol) {
    OpenMappingReport report;
    report.delta = open_mapping_delta(t);
    report.delta_checked = delta_override.value_or(report.delta);
    report.trials = trials;
    const std::size_t rows = t.rows();

    WorstMargin residuals, bounds;
    const auto check_point = [&](const BCVector& y) {
        const SolveReport solve = min_norm_solve(t, y);
        residuals.update(solve.residual, Hyperbolic());
        bounds.update(solve.qy, report.delta_checked * vec_dnorm(y));
        return solve;
    };

    const BCVector witness = open_mapping_witness(t);
    const SolveReport witness_solve = check_point(witness);
    const DPlus witness_norm = vec_dnorm(witness);
    report.witness_ratio = witness_solve.qy * inverse(witness_norm);
    const double minimal = 1.0 - 1e-6;
    report.delta_minimal = report.witness_ratio.a1() >= minimal * report.delta.a1() &&
                           report.witness_ratio.a2() >= minimal * report.delta.a2();

    for (std::size_t i = 0; i < trials; ++i) {
        CounterRng rng(seed, i);
        check_point(random_vector(rng, rows));
    }
    report.worst_residual = residuals.value();
    report.worst_bound_margin = bounds.value();
    report.solves_ok = residuals.within(tol);
    report.bounds_ok = bounds.within(tol);

    // q on y = sum y_k with y_k = 2^-k g_k: preimages within q(y_k) + eps/2^k
    // sum to a preimage of y, so q(y) <= sum q(y_k) + eps.
    QuotientSeriesCheck& q = report.quotient;
    q.terms = 40;
    q.eps = DPlus::real(1e-6);
    CounterRng rng(seed, kSeriesStream);
    BCVector y_sum = BCVector::zero(rows);
    BCVector x_sum = BCVector::zero(t.cols());
    bool budget_ok = true;
    double scale = 1.0;
    for (std::size_t k = 1; k <= q.terms; ++k) {
        scale *= 0.5;
        const BCVector y_k = scale * random_vector(rng, rows);
        const SolveReport solve = min_norm_solve(t, y_k);
        const DPlus eps_k = scale * q.eps;
        budget_ok = budget_ok && leq(vec_dnorm(solve.x), solve.qy + eps_k);
        q.q_sum = q.q_sum + solve.qy;
        q.preimage_norm_sum = q.preimage_norm_sum + vec_dnorm(solve.x);
        y_sum = y_sum + y_k;
        x_sum = x_sum + solve.x;
    }
    const SolveReport total = min_norm_solve(t, y_sum);
    q.q_of_sum = total.qy;
    q.margin = q.q_of_sum.value() - (q.q_sum + q.eps).value();
    const bool preimage_ok = leq_within(vec_dnorm(mat_apply(t, x_sum) - y_sum), Hyperbolic(), tol);
    q.ok = budget_ok && preimage_ok && leq_within(q.q_of_sum, vec_dnorm(x_sum), tol) &&
           leq_within(vec_dnorm(x_sum), q.preimage_norm_sum, tol) && leq_within(q.q_of_sum, q.q_sum + q.eps, tol);

    report.all_ok = report.solves_ok && report.bounds_ok && report.delta_minimal && q.ok;
    return report;
}

}  // namespace hyplab
