#include "hyplab/dop.hpp"

#include <algorithm>
#include <string>

#include "hyplab/error.hpp"

namespace hyplab {

namespace {

void require_positive_tol(double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
}

// A unit column of v, falling back to the first basis vector when the
// decomposition left it zero (zero singular value of a wide matrix).
Eigen::VectorXcd unit_column(const Eigen::MatrixXcd& v, Eigen::Index col) {
    Eigen::VectorXcd out = v.col(col);
    if (out.norm() == 0.0) {
        out.setZero();
        out(0) = 1.0;
    }
    return out;
}

Eigen::VectorXcd pseudo_solve(const Svd& svd, const Eigen::VectorXcd& y, double tol) {
    const std::size_t rank = numerical_rank(svd, tol);
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(svd.v.rows());
    for (std::size_t i = 0; i < rank; ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        const std::complex<double> coeff = svd.u.col(k).dot(y) / svd.s(k);
        x += coeff * svd.v.col(k);
    }
    return x;
}

}  // namespace

ComponentSvd component_svd(const BCMatrix& t) { return {jacobi_svd(t.m1()), jacobi_svd(t.m2())}; }

OperatorNormReport op_dnorm(const BCMatrix& t, double tol) {
    require_positive_tol(tol);
    const ComponentSvd svd = component_svd(t);
    OperatorNormReport report;
    report.sigma_max1 = svd.c1.s(0);
    report.sigma_max2 = svd.c2.s(0);
    report.m = DPlus(report.sigma_max1, report.sigma_max2);
    report.iterations = std::max(svd.c1.sweeps, svd.c2.sweeps);
    report.tol = tol;
    return report;
}

DPlus seminorm_bound(const DSeminorm& p, double tol) {
    if (p.codomain.component != ComponentNorm::L2) {
        throw Error(ErrorKind::UnsupportedNorm,
                    "operator D-norm needs the l2 component norm, got " + std::string(to_string(p.codomain.component)));
    }
    return op_dnorm(p.op, tol).m;
}

BCVector norm_witness(const BCMatrix& t) {
    const ComponentSvd svd = component_svd(t);
    return {unit_column(svd.c1.v, 0), unit_column(svd.c2.v, 0)};
}

SolveReport min_norm_solve(const BCMatrix& t, const BCVector& y, double tol) {
    require_positive_tol(tol);
    if (y.dim() != t.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "right-hand side has dimension " + std::to_string(y.dim()) +
                                                      ", operator has " + std::to_string(t.rows()) + " rows");
    }
    const ComponentSvd svd = component_svd(t);
    BCVector x(pseudo_solve(svd.c1, y.v1(), tol), pseudo_solve(svd.c2, y.v2(), tol));
    const DPlus residual = vec_dnorm(mat_apply(t, x) - y);
    const DPlus ynorm = vec_dnorm(y);
    if (residual.a1() > tol * std::max(1.0, ynorm.a1()) || residual.a2() > tol * std::max(1.0, ynorm.a2())) {
        throw Error(ErrorKind::NotInRange, "right-hand side is outside the range of the operator (residual " +
                                               std::to_string(residual.a1()) + ", " + std::to_string(residual.a2()) +
                                               ")");
    }
    const DPlus qy = vec_dnorm(x);
    return {std::move(x), qy, residual};
}

SurjectivityReport surjectivity_check(const BCMatrix& t, double tol) {
    require_positive_tol(tol);
    const ComponentSvd svd = component_svd(t);
    SurjectivityReport report;
    report.rows = t.rows();
    report.rank1 = numerical_rank(svd.c1, tol);
    report.rank2 = numerical_rank(svd.c2, tol);
    report.surjective = report.rank1 == report.rows && report.rank2 == report.rows;
    return report;
}

DPlus open_mapping_delta(const BCMatrix& t, double tol) {
    const SurjectivityReport rank = surjectivity_check(t, tol);
    if (!rank.surjective) {
        throw Error(ErrorKind::NotSurjective, "operator is not surjective (component ranks " +
                                                  std::to_string(rank.rank1) + ", " + std::to_string(rank.rank2) +
                                                  " of " + std::to_string(rank.rows) + ")");
    }
    const ComponentSvd svd = component_svd(t);
    return inverse(DPlus(svd.c1.s(svd.c1.s.size() - 1), svd.c2.s(svd.c2.s.size() - 1)));
}

BCVector open_mapping_witness(const BCMatrix& t) {
    const ComponentSvd svd = component_svd(t);
    return {unit_column(svd.c1.u, svd.c1.u.cols() - 1), unit_column(svd.c2.u, svd.c2.u.cols() - 1)};
}

}  // namespace hyplab
