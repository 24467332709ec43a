#include "hyplab/dmodule.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hyplab {

std::string_view to_string(ComponentNorm norm) noexcept {
    switch (norm) {
        case ComponentNorm::L2: return "l2";
        case ComponentNorm::L1: return "l1";
        case ComponentNorm::LInf: return "linf";
    }
    return "unknown";
}

ComponentNorm parse_component_norm(std::string_view name) {
    if (name == "l2") return ComponentNorm::L2;
    if (name == "l1") return ComponentNorm::L1;
    if (name == "linf") return ComponentNorm::LInf;
    throw Error(ErrorKind::UnsupportedNorm, "unknown component norm '" + std::string(name) + "'");
}

double component_norm(const Eigen::VectorXcd& v, ComponentNorm norm) {
    switch (norm) {
        case ComponentNorm::L2: return v.norm();
        case ComponentNorm::L1: return v.cwiseAbs().sum();
        case ComponentNorm::LInf: return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
    }
    return 0.0;
}

DPlus vec_dnorm(const BCVector& v, DNormConfig cfg) {
    return {component_norm(v.v1(), cfg.component), component_norm(v.v2(), cfg.component)};
}

DPlus DSeminorm::operator()(const BCVector& x) const { return vec_dnorm(mat_apply(op, x), codomain); }

DPlus seminorm_eval(const DSeminorm& p, const BCVector& x) { return p(x); }

bool v_alpha_member(const DSeminorm& p, const BCVector& x, const DPlus& alpha) {
    const auto rel = compare(p(x), alpha);
    return rel == OrderRel::Less || rel == OrderRel::Equal;
}

bool v_alpha_closure_member(const DSeminorm& p, const BCVector& x, const DPlus& alpha, double tol) {
    return leq_within(p(x), alpha, tol);
}

TermSource finite_terms(std::vector<BCVector> terms) {
    return [terms = std::move(terms)](std::size_t k) -> std::optional<BCVector> {
        if (k >= terms.size()) return std::nullopt;
        return terms[k];
    };
}

TermSource geometric_terms(const Bicomplex& ratio, BCVector seed) {
    // Caches the running power; sequential access costs one product per term.
    return [ratio, seed = std::move(seed), power = Bicomplex::one(), next = std::size_t{0}](
               std::size_t k) mutable -> std::optional<BCVector> {
        if (k < next) {
            power = Bicomplex::one();
            next = 0;
        }
        while (next < k) {
            power = power * ratio;
            ++next;
        }
        return power * seed;
    };
}

SeriesNotConverged::SeriesNotConverged(SeriesReport report)
    : Error(ErrorKind::NotConverged,
            "series did not meet its tail budget within " + std::to_string(report.terms_used) + " terms"),
      report_(std::move(report)) {}

namespace {

void validate(const SeriesOptions& opts) {
    if (!opts.tol.is_strictly_positive()) {
        throw Error(ErrorKind::InvalidInput, "series tolerance must be strictly positive");
    }
    if (opts.max_terms < 1) throw Error(ErrorKind::InvalidInput, "series term cap must be at least 1");
    if (opts.window < 1) throw Error(ErrorKind::InvalidInput, "series window must be at least 1");
}

// Shared accumulation: stops when the source ends, the window budget is met, or the cap is hit.
SeriesReport accumulate(const TermSource& terms, const SeriesOptions& opts) {
    validate(opts);
    SeriesReport report;
    report.tol = opts.tol;

    std::vector<DPlus> term_norms;
    std::optional<BCVector> sum;
    DPlus abs_sum;
    for (std::size_t k = 0; k < opts.max_terms; ++k) {
        auto term = terms(k);
        if (!term) {
            report.converged = true;
            break;
        }
        if (sum && term->dim() != sum->dim()) {
            throw Error(ErrorKind::DimensionMismatch, "series term " + std::to_string(k + 1) + " has dimension " +
                                                          std::to_string(term->dim()) + ", expected " +
                                                          std::to_string(sum->dim()));
        }
        const DPlus norm = vec_dnorm(*term);
        sum = sum ? *sum + *term : *term;
        abs_sum = abs_sum + norm;
        term_norms.push_back(norm);
        report.partial_sums.push_back(*sum);
        report.abs_sums.push_back(abs_sum);

        const std::size_t n = term_norms.size();
        const std::size_t first = n > opts.window ? n - opts.window : 0;
        DPlus window_sum;
        for (std::size_t i = first; i < n; ++i) window_sum = window_sum + term_norms[i];
        report.tail_estimate = window_sum;
        if (n >= opts.window && leq(window_sum, opts.tol)) {
            report.converged = true;
            break;
        }
    }
    report.terms_used = report.partial_sums.size();
    if (report.converged && sum) report.limit = *sum;
    return report;
}

}  // namespace

SeriesReport series_sum(const TermSource& terms, const SeriesOptions& opts) {
    auto report = accumulate(terms, opts);
    if (report.terms_used == 0) throw Error(ErrorKind::EmptySet, "series has no terms");
    if (!report.converged) throw SeriesNotConverged(std::move(report));
    return report;
}

SeriesReport abs_summability_check(const TermSource& terms, const SeriesOptions& opts) {
    auto report = accumulate(terms, opts);
    if (report.terms_used == 0) throw Error(ErrorKind::EmptySet, "series has no terms");
    report.abs_converged = report.converged;

    const std::size_t count = report.terms_used;
    const BCVector origin = BCVector::zero(report.partial_sums.front().dim());
    double worst1 = -std::numeric_limits<double>::infinity();
    double worst2 = worst1;
    bool ok = true;
    std::size_t pairs = 0;
    // m = 0 is the empty partial sum s_0 = 0.
    for (std::size_t n = 1; n <= count; ++n) {
        const BCVector& s_n = report.partial_sums[n - 1];
        const DPlus& a_n = report.abs_sums[n - 1];
        for (std::size_t m = 0; m < n; ++m) {
            const BCVector& s_m = m == 0 ? origin : report.partial_sums[m - 1];
            const DPlus a_m = m == 0 ? DPlus{} : report.abs_sums[m - 1];
            const DPlus lhs = vec_dnorm(s_n - s_m);
            const double rhs1 = a_n.a1() - a_m.a1();
            const double rhs2 = a_n.a2() - a_m.a2();
            worst1 = std::max(worst1, lhs.a1() - rhs1);
            worst2 = std::max(worst2, lhs.a2() - rhs2);
            const double slack1 = opts.chain_tol * std::max(1.0, a_n.a1());
            const double slack2 = opts.chain_tol * std::max(1.0, a_n.a2());
            if (lhs.a1() > rhs1 + slack1 || lhs.a2() > rhs2 + slack2) ok = false;
            ++pairs;
        }
    }
    report.cauchy_pairs_checked = pairs;
    report.cauchy_margin = Hyperbolic(worst1, worst2);
    report.cauchy_chain_ok = ok;
    return report;
}

}  // namespace hyplab
