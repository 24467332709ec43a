// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "hyplab/cli.hpp"
#include "hyplab/json_io.hpp"
#include "hyplab/random.hpp"
#include "hyplab/theoremlab.hpp"
#include "oracles.hpp"

namespace {

using namespace hyplab;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::setprecision(3) << v;
    return ss.str();
}

double rel_err(const Complex& got, const Complex& want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// ---------------------------------------------------------------------------

Outcome algebra_suite() {
    Outcome o;
    const auto i = Bicomplex::unit_i(), j = Bicomplex::unit_j(), k = Bicomplex::unit_k();
    const auto one = Bicomplex::one(), e1 = Bicomplex::e1(), e2 = Bicomplex::e2();
    const std::pair<Bicomplex, Bicomplex> exact[] = {
        {i * i, -one}, {j * j, -one}, {k * k, one}, {i * j, k}, {i * k, -j},
        {j * k, -i},   {e1 * e1, e1}, {e2 * e2, e2}, {e1 * e2, Bicomplex::zero()}, {e1 + e2, one},
    };
    for (const auto& [lhs, rhs] : exact)
        if (!(lhs == rhs)) o.fail("unit table identity not exact");
    // The same identities through the 4-real table.
    if (oracle::mul({0, 1, 0, 0}, {0, 0, 1, 0}) != k.to_reals()) o.fail("i*j differs from table");

    double worst = 0.0;
    for (std::uint64_t s = 0; s < 10000; ++s) {
        CounterRng rng(1001, s);
        const oracle::Reals ra = oracle::random_reals(rng), rb = oracle::random_reals(rng), rc = oracle::random_reals(rng);
        const Bicomplex a = Bicomplex::from_reals(ra), b = Bicomplex::from_reals(rb), c = Bicomplex::from_reals(rc);
        const auto cmp = [&](const Bicomplex& x, const Bicomplex& y) {
            worst = std::max({worst, rel_err(x.z1(), y.z1()), rel_err(x.z2(), y.z2())});
        };
        cmp((a * b) * c, a * (b * c));
        cmp(a * (b + c), a * b + a * c);
        cmp(a * b, b * a);
        cmp(a + (b + c), (a + b) + c);
        cmp(a * one, a);
        // Homomorphism: the idempotent product matches cartesian multiplication.
        const oracle::Reals want = oracle::mul(ra, rb);
        const double scale = std::max(1.0, oracle::max_abs(want));
        worst = std::max(worst, oracle::max_abs_diff((a * b).to_reals(), want) / scale);
        const oracle::Reals want_sum = oracle::add(ra, rb);
        worst = std::max(worst, oracle::max_abs_diff((a + b).to_reals(), want_sum) / std::max(1.0, oracle::max_abs(want_sum)));
    }
    if (worst > 1e-12) o.fail("ring/homomorphism error " + fmt(worst));
    if (o.ok) o.detail = "exact unit table; worst relative error " + fmt(worst) + " over 10^4 samples";
    return o;
}

Outcome norm_suite() {
    Outcome o;
    const ComponentNorm norms[] = {ComponentNorm::L2, ComponentNorm::L1, ComponentNorm::LInf};
    double worst = 0.0;
    const auto excess = [&](double lhs, double rhs) { worst = std::max(worst, (lhs - rhs) / std::max(1.0, std::abs(rhs))); };
    const auto diff = [&](double lhs, double rhs) { worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))); };
    for (std::uint64_t s = 0; s < 10000; ++s) {
        CounterRng rng(1002, s);
        const Bicomplex z = random_bicomplex(rng), w = random_bicomplex(rng);
        // Multiplicativity against the complex moduli.
        const DPlus kz = knorm(z * w);
        diff(kz.a1(), std::abs(z.z1()) * std::abs(w.z1()));
        diff(kz.a2(), std::abs(z.z2()) * std::abs(w.z2()));
        // knorm <= sqrt(2) euclid, with euclid from the 4-real coefficients.
        const oracle::Reals r = z.to_reals();
        const double euclid = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
        diff(euclid_norm(z), euclid);
        excess(knorm(z).a1(), std::sqrt(2.0) * euclid);
        excess(knorm(z).a2(), std::sqrt(2.0) * euclid);
        // |alpha|_k = alpha on D+.
        const DPlus alpha(std::abs(rng.normal()), std::abs(rng.normal()));
        if (!(hyp_abs(alpha) == alpha)) o.fail("hyp_abs moved a D+ value");
        const DPlus ka = knorm(Bicomplex(alpha));
        diff(ka.a1(), alpha.a1());
        diff(ka.a2(), alpha.a2());
        // D-norm axioms.
        const DNormConfig cfg{norms[s % 3]};
        const std::size_t dim = 1 + s % 6;
        const BCVector x = random_vector(rng, dim), y = random_vector(rng, dim);
        const DPlus nx = vec_dnorm(x, cfg), ny = vec_dnorm(y, cfg);
        if (!nx.is_strictly_positive()) o.fail("nonzero vector with a zero norm component");
        if (!vec_dnorm(BCVector::zero(dim), cfg).is_zero()) o.fail("zero vector with nonzero norm");
        const DPlus hom = vec_dnorm(z * x, cfg);
        diff(hom.a1(), knorm(z).a1() * nx.a1());
        diff(hom.a2(), knorm(z).a2() * nx.a2());
        const DPlus tri = vec_dnorm(x + y, cfg);
        excess(tri.a1(), nx.a1() + ny.a1());
        excess(tri.a2(), nx.a2() + ny.a2());
    }
    if (worst > 1e-12) o.fail("norm identity error " + fmt(worst));
    if (o.ok) o.detail = "worst relative slack " + fmt(worst) + " over 10^4 samples, l2/l1/linf";
    return o;
}

Outcome operator_norm_suite() {
    Outcome o;
    const auto start = Clock::now();
    double worst_sound = -1.0, worst_gap = 0.0, worst_refined = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        CounterRng rng(1003, s);
        const BCMatrix t = random_matrix(rng, 4, 4);
        const DPlus m = op_dnorm(t).m;
        const double mc[2] = {m.a1(), m.a2()};
        const Eigen::MatrixXcd* comps[2] = {&t.m1(), &t.m2()};
        for (int c = 0; c < 2; ++c) {
            CounterRng probe(1003, 1000 + 2 * s + std::uint64_t(c));
            double sup = 0.0;
            Eigen::VectorXcd arg;
            for (int n = 0; n < 100000; ++n) {
                Eigen::VectorXcd v = oracle::random_unit(probe, 4);
                const double val = (*comps[c] * v).norm();
                worst_sound = std::max(worst_sound, val - mc[c]);  // ||v|| = 1
                if (val > sup) {
                    sup = val;
                    arg = std::move(v);
                }
            }
            if (mc[c] < sup - 1e-3 * mc[c]) o.fail("M below the sampled supremum");
            worst_gap = std::max(worst_gap, (mc[c] - sup) / mc[c]);
            const double refined = oracle::hill_climb_sup(*comps[c], arg, probe, 5000);
            worst_refined = std::max(worst_refined, std::abs(mc[c] - refined) / mc[c]);
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (worst_sound > 1e-9) o.fail("soundness violated by " + fmt(worst_sound));
    if (worst_refined > 1e-3) o.fail("refined supremum off by " + fmt(worst_refined));
    if (secs >= 10.0) o.fail("took " + fmt(secs) + " s");
    if (o.ok)
        o.detail = "50 matrices x 10^5 unit vectors, " + fmt(secs) + " s; max sampling gap " + fmt(worst_gap) +
                   ", refined gap " + fmt(worst_refined) + ", soundness excess " + fmt(std::max(0.0, worst_sound));
    return o;
}

Outcome open_mapping_suite() {
    Outcome o;
    double worst_res = 0.0, worst_bound = -1.0, worst_delta = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        CounterRng rng(1004, s);
        const BCMatrix t = random_matrix(rng, 3, 6);
        if (!surjectivity_check(t).surjective) {
            o.fail("random 3x6 not surjective");
            continue;
        }
        const DPlus delta = open_mapping_delta(t);
        const double d_ref[2] = {1.0 / oracle::normal_equations_sigma_min(t.m1()),
                                 1.0 / oracle::normal_equations_sigma_min(t.m2())};
        worst_delta = std::max({worst_delta, std::abs(delta.a1() - d_ref[0]) / std::max(1.0, d_ref[0]),
                                std::abs(delta.a2() - d_ref[1]) / std::max(1.0, d_ref[1])});
        for (std::uint64_t n = 0; n < 1000; ++n) {
            CounterRng probe(1004, 100000 * (s + 1) + n);
            const BCVector y = random_vector(probe, 3);
            const SolveReport r = min_norm_solve(t, y);
            // Residual recomputed with plain Eigen products.
            worst_res = std::max({worst_res, (t.m1() * r.x.v1() - y.v1()).norm(), (t.m2() * r.x.v2() - y.v2()).norm()});
            worst_bound = std::max({worst_bound, r.x.v1().norm() - delta.a1() * y.v1().norm(),
                                    r.x.v2().norm() - delta.a2() * y.v2().norm()});
        }
    }
    if (worst_res > 1e-9) o.fail("residual " + fmt(worst_res));
    if (worst_bound > 1e-9) o.fail("bound exceeded by " + fmt(worst_bound));
    if (worst_delta > 1e-8) o.fail("delta differs from normal equations by " + fmt(worst_delta));
    if (o.ok)
        o.detail = "20 matrices x 10^3 y; residual " + fmt(worst_res) + ", bound slack " + fmt(worst_bound) +
                   ", delta vs oracle " + fmt(worst_delta);
    return o;
}

Outcome zabreiko_suite() {
    Outcome o;
    double worst = -1.0;
    std::size_t total_terms = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        CounterRng rng(1005, s);
        const std::size_t rows = 1 + s % 4, cols = 2 + (s / 4) % 4;
        const BCMatrix t = random_matrix(rng, rows, cols);
        const DSeminorm p{t};
        const double r = 0.25 + 3 * rng.uniform();
        // alpha* from an independent SVD; m sits at or above the 2 alpha* r threshold.
        const double a1 = Eigen::JacobiSVD<Eigen::MatrixXcd>(t.m1()).singularValues()(0);
        const double a2 = Eigen::JacobiSVD<Eigen::MatrixXcd>(t.m2()).singularValues()(0);
        const double lift = s % 5 == 0 ? 1.0 + 1e-6 : 1.0 + 3 * rng.uniform();
        const DPlus m(2 * a1 * r * lift, 2 * a2 * r * lift);
        const DPlus eps(0.001 + rng.uniform(), 0.001 + rng.uniform());
        const BCVector x = (r * (s % 3 == 0 ? 1.0 : rng.uniform())) * random_unit_vector(rng, cols);
        const ZabreikoTrace tr = zabreiko_decompose(p, x, m, r, eps, s % 7 == 0 ? 3 : 1000);
        total_terms += tr.x_terms.size();

        const auto pe = [&](const BCVector& v) {
            return std::pair{(t.m1() * v.v1()).norm(), (t.m2() * v.v2()).norm()};
        };
        const auto note = [&](double lhs1, double rhs1, double lhs2, double rhs2) {
            worst = std::max({worst, lhs1 - rhs1, lhs2 - rhs2});
        };
        const double e0[2] = {x.v1().norm() / r, x.v2().norm() / r};
        Eigen::VectorXcd u1 = x.v1(), u2 = x.v2();
        for (std::size_t k = 1; k <= tr.x_terms.size(); ++k) {
            const BCVector& xk = tr.x_terms[k - 1];
            const double scale = std::ldexp(1.0, -int(k));
            const double ek[2] = {eps.a1() / (m.a1()) * scale, eps.a2() / (m.a2()) * scale};
            const double ekm1[2] = {k == 1 ? e0[0] : 2 * ek[0], k == 1 ? e0[1] : 2 * ek[1]};
            const auto [p1, p2] = pe(xk);
            note(p1, ekm1[0] * m.a1(), p2, ekm1[1] * m.a2());
            u1 -= xk.v1();
            u2 -= xk.v2();
            if (!(BCVector(u1, u2) == tr.remainders[k - 1])) o.fail("remainder recursion not exact");
            note(u1.norm(), ek[0] * r, u2.norm(), ek[1] * r);
            // Tail of the partial sum, which equals the remainder up to rounding.
            Eigen::VectorXcd s1 = Eigen::VectorXcd::Zero(Eigen::Index(cols)), s2 = s1;
            for (std::size_t j = 0; j < k; ++j) {
                s1 += tr.x_terms[j].v1();
                s2 += tr.x_terms[j].v2();
            }
            note((x.v1() - s1).norm(), eps.a1() * r / m.a1() * scale, (x.v2() - s2).norm(), eps.a2() * r / m.a2() * scale);
        }
        const auto [px1, px2] = pe(x);
        note(px1, m.a1() / r * x.v1().norm() + eps.a1(), px2, m.a2() / r * x.v2().norm() + eps.a2());
        if (!tr.invariants_ok || !tr.final_bound_ok) o.fail("trace flags report a failure");
    }
    if (worst > 1e-9) o.fail("trace inequality exceeded by " + fmt(worst));
    if (o.ok)
        o.detail = "20 instances, " + std::to_string(total_terms) + " terms replayed; worst slack " + fmt(worst);
    return o;
}

Outcome series_suite() {
    Outcome o;
    SeriesOptions opts;
    opts.max_terms = 200;
    const auto scalar = BCVector::from_scalars(std::vector{Bicomplex::one()});
    const SeriesReport rep = series_sum(geometric_terms(Bicomplex(0.5, 0.25), scalar), opts);
    const Bicomplex lim = (*rep.limit)[0];
    const double err = std::max(std::abs(lim.z1() - 2.0), std::abs(lim.z2() - 4.0 / 3.0));
    if (err > 1e-12) o.fail("geometric limit off by " + fmt(err));

    // Cauchy chain on vector geometric series, replayed independently of the library's own replay.
    double worst = -1.0;
    std::size_t pairs = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
        CounterRng rng(1006, s);
        const Bicomplex ratio(0.9 * rng.uniform() * std::polar(1.0, 6.3 * rng.uniform()),
                              0.9 * rng.uniform() * std::polar(1.0, 6.3 * rng.uniform()));
        const BCVector seed = random_vector(rng, 3);
        const SeriesReport r = abs_summability_check(geometric_terms(ratio, seed));
        if (!r.abs_converged || !r.cauchy_chain_ok) o.fail("library chain check failed");
        const std::size_t n_terms = r.partial_sums.size();
        std::vector<Eigen::VectorXcd> s1{Eigen::VectorXcd::Zero(3)}, s2{Eigen::VectorXcd::Zero(3)};
        std::vector<double> a1{0.0}, a2{0.0};
        Complex p1 = 1.0, p2 = 1.0;
        for (std::size_t k = 0; k < n_terms; ++k, p1 *= ratio.z1(), p2 *= ratio.z2()) {
            const Eigen::VectorXcd x1 = p1 * seed.v1(), x2 = p2 * seed.v2();
            s1.push_back(s1.back() + x1);
            s2.push_back(s2.back() + x2);
            a1.push_back(a1.back() + x1.norm());
            a2.push_back(a2.back() + x2.norm());
        }
        for (std::size_t n = 1; n <= n_terms; ++n)
            for (std::size_t mm = 0; mm < n; ++mm, ++pairs)
                worst = std::max({worst, ((s1[n] - s1[mm]).norm() - (a1[n] - a1[mm])) / std::max(1.0, a1[n]),
                                  ((s2[n] - s2[mm]).norm() - (a2[n] - a2[mm])) / std::max(1.0, a2[n])});
    }
    if (worst > 1e-12) o.fail("Cauchy chain exceeded by " + fmt(worst));
    if (o.ok)
        o.detail = "limit error " + fmt(err) + " after " + std::to_string(rep.terms_used) + " terms; " +
                   std::to_string(pairs) + " Cauchy pairs, worst slack " + fmt(worst);
    return o;
}

Outcome ubp_suite() {
    Outcome o;
    double worst_member = -1.0, worst_bound = -1.0;
    std::size_t caught = 0;
    for (std::uint64_t f = 0; f < 10; ++f) {
        std::vector<BCMatrix> family;
        for (std::uint64_t k = 0; k < 10; ++k) {
            CounterRng rng(1007, 100 * f + k);
            family.push_back(random_matrix(rng, 3, 4));
        }
        const UBPReport rep = ubp_verify(family, 100, f);
        if (!rep.all_bounds_ok) o.fail("library chain check failed");

        // Independent replay at our own 100 points: delta from Eigen's SVD.
        double d1 = 0.0, d2 = 0.0;
        std::size_t arg1 = 0, arg2 = 0;
        for (std::size_t k = 0; k < family.size(); ++k) {
            const double s1 = Eigen::JacobiSVD<Eigen::MatrixXcd>(family[k].m1()).singularValues()(0);
            const double s2 = Eigen::JacobiSVD<Eigen::MatrixXcd>(family[k].m2()).singularValues()(0);
            if (s1 > d1) d1 = s1, arg1 = k;
            if (s2 > d2) d2 = s2, arg2 = k;
        }
        for (std::uint64_t n = 0; n < 100; ++n) {
            CounterRng probe(1007, 1000000 + 1000 * f + n);
            const BCVector x = random_vector(probe, 4);
            double sup1 = 0.0, sup2 = 0.0;
            std::vector<std::pair<double, double>> vals;
            for (const auto& t : family) {
                vals.emplace_back((t.m1() * x.v1()).norm(), (t.m2() * x.v2()).norm());
                sup1 = std::max(sup1, vals.back().first);
                sup2 = std::max(sup2, vals.back().second);
            }
            for (const auto& [v1, v2] : vals) worst_member = std::max({worst_member, v1 - sup1, v2 - sup2});
            worst_bound = std::max({worst_bound, sup1 - d1 * x.v1().norm(), sup2 - d2 * x.v2().norm()});
        }
        // Shrunk delta must be caught, both by the library and by the Eigen witness.
        const DPlus shrunk((1 - 1e-6) * rep.sup_opnorm.a1(), (1 - 1e-6) * rep.sup_opnorm.a2());
        if (ubp_verify(family, 100, f, shrunk).all_bounds_ok) o.fail("shrunk delta not caught by ubp_verify");
        const Eigen::VectorXcd w1 = Eigen::JacobiSVD<Eigen::MatrixXcd>(family[arg1].m1(), Eigen::ComputeThinV).matrixV().col(0);
        const Eigen::VectorXcd w2 = Eigen::JacobiSVD<Eigen::MatrixXcd>(family[arg2].m2(), Eigen::ComputeThinV).matrixV().col(0);
        if ((family[arg1].m1() * w1).norm() > shrunk.a1() * w1.norm() + 1e-12 &&
            (family[arg2].m2() * w2).norm() > shrunk.a2() * w2.norm() + 1e-12)
            ++caught;
        if (std::abs(d1 - rep.sup_opnorm.a1()) > 1e-9 * d1 || std::abs(d2 - rep.sup_opnorm.a2()) > 1e-9 * d2)
            o.fail("sup of operator norms differs from SVD oracle");
    }
    if (worst_member > 1e-9) o.fail("p_s(x) above p*(x) by " + fmt(worst_member));
    if (worst_bound > 1e-9) o.fail("p*(x) above delta ||x|| by " + fmt(worst_bound));
    if (caught != 10) o.fail("witness missed a shrunk delta");
    if (o.ok)
        o.detail = "10 families x 10 matrices x 100 points; bound slack " + fmt(worst_bound) +
                   "; shrunk delta caught in 10/10";
    return o;
}

Outcome determinism_suite() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hyplab_acceptance";
    fs::create_directories(dir);
    const auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    CounterRng rng(1008, 0);
    const BCMatrix sq = random_matrix(rng, 3, 3);
    const BCMatrix wide = random_matrix(rng, 2, 5);
    const std::string sq_p = write("sq.json", to_json(sq).dump());
    const std::string wide_p = write("wide.json", to_json(wide).dump());
    const std::string v3 = write("v3.json", to_json(random_vector(rng, 3)).dump());
    const std::string v2 = write("v2.json", to_json(random_vector(rng, 2)).dump());
    const std::string x = write("x.json", to_json(0.7 * random_unit_vector(rng, 3)).dump());
    const std::string id = write("id.json", to_json(BCMatrix::identity(3)).dump());
    const std::string z = write("z.json", R"({"w":[1,2,-0.5,0.25]})");
    const std::string series =
        write("s.json", Json{{"kind", "geometric"}, {"ratio", Json{{"e1", {0.5, 0}}, {"e2", {0.25, 0}}}},
                             {"seed_vector", to_json(random_vector(rng, 3))}}.dump());
    Json fam = Json::array();
    for (int k = 0; k < 5; ++k) fam.push_back(to_json(random_matrix(rng, 3, 3)));
    const std::string family = write("f.json", fam.dump());
    const DPlus a = op_dnorm(sq).m;
    std::ostringstream alpha, m;
    alpha << std::setprecision(17) << 1.01 * a.a1() << ',' << 1.01 * a.a2();
    m << std::setprecision(17) << 3 * a.a1() << ',' << 3 * a.a2();

    const std::vector<std::vector<std::string>> runs = {
        {"knorm", "--scalar", z},
        {"inv", "--scalar", z},
        {"norm", "--vector", v3},
        {"opnorm", "--matrix", sq_p},
        {"solve", "--matrix", wide_p, "--vector", v2},
        {"omc", "--matrix", wide_p},
        {"series", "--series", series},
        {"zabreiko", "--matrix", id, "--x", x, "--m", "2,2", "--r", "1", "--eps", "1,1", "--seed", "7"},
        {"zabreiko", "--matrix", sq_p, "--x", x, "--m", m.str(), "--r", "1", "--eps", "0.5,0.1"},
        {"ubp", "--family", family, "--seed", "3"},
        {"omt-verify", "--matrix", wide_p, "--seed", "5"},
        {"lemma31", "--matrix", sq_p, "--seed", "11"},
        {"subadd", "--matrix", sq_p, "--series", series},
        {"ballscale", "--matrix", sq_p, "--alpha", alpha.str(), "--r", "1", "--seed", "13"},
        {"inv", "--scalar", write("e1.json", R"({"e1":[1,0],"e2":[0,0]})")},
    };
    std::size_t identical = 0;
    for (const auto& args : runs) {
        std::ostringstream out1, out2, err;
        const int c1 = cli::run(args, out1, err);
        const int c2 = cli::run(args, out2, err);
        if (c1 != c2 || out1.str() != out2.str()) {
            o.fail(args[0] + " not byte-identical");
            continue;
        }
        try {
            const Json doc = Json::parse(out1.str());
            if (dump_canonical(doc) != out1.str()) o.fail(args[0] + " output is not canonical");
        } catch (const Json::exception&) {
            o.fail(args[0] + " output is not one JSON document");
        }
        ++identical;
    }
    fs::remove_all(dir);
    if (o.ok) o.detail = std::to_string(identical) + " invocations covering all 13 subcommands, byte-identical";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1 algebra suite", algebra_suite},
        {"AC2 norm suite", norm_suite},
        {"AC3 operator-norm oracle equivalence", operator_norm_suite},
        {"AC4 open-mapping suite", open_mapping_suite},
        {"AC5 Zabreiko replay", zabreiko_suite},
        {"AC6 series suite", series_suite},
        {"AC7 UBP suite", ubp_suite},
        {"AC8 determinism", determinism_suite},
    };
    const auto start = Clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%d/8 criteria passed in %.2f s\n", 8 - failed, total);
    return failed == 0 ? 0 : 1;
}
