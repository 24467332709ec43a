#include "hyplab/json_io.hpp"

#include <charconv>
#include <string>

#include "hyplab/error.hpp"

namespace hyplab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

double number(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("complex values are encoded as [re, im]");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Eigen::VectorXcd complex_vector(const Json& j, std::size_t dim, const char* key) {
    if (!j.is_array() || j.size() != dim) bad(std::string("vector component '") + key + "' must have dim entries");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

Eigen::MatrixXcd complex_matrix(const Json& j, std::size_t rows, std::size_t cols, const char* key) {
    if (!j.is_array() || j.size() != rows) bad(std::string("matrix component '") + key + "' must have rows rows");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) bad(std::string("matrix component '") + key + "' row length");
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
        }
    }
    return m;
}

std::size_t count(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
        bad(std::string("'") + key + "' must be a positive integer");
    }
    return j[key].get<std::size_t>();
}

Json hyp_list(const std::vector<DPlus>& values, ScalarFormat fmt) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_json(v.value(), fmt));
    return out;
}

void write_canonical(const Json& j, std::string& out, int indent) {
    const auto pad = [&](int level) { out.append(static_cast<std::size_t>(2 * level), ' '); };
    switch (j.type()) {
        case Json::value_t::number_float: {
            char buf[40];
            // -0 would parse back as the integer 0.
            const double v = j.get<double>() == 0.0 ? 0.0 : j.get<double>();
            const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
            out.append(buf, res.ptr);
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool flat = true;
            for (const auto& e : j) flat = flat && !e.is_structured();
            if (flat) {
                out += '[';
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    write_canonical(j[i], out, indent);
                }
                out += ']';
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                pad(indent + 1);
                write_canonical(j[i], out, indent + 1);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            pad(indent);
            out += ']';
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : j.items()) {
                pad(indent + 1);
                out += Json(key).dump();
                out += ": ";
                write_canonical(value, out, indent + 1);
                out += ++i < j.size() ? ",\n" : "\n";
            }
            pad(indent);
            out += '}';
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

ScalarFormat parse_scalar_format(const std::string& name) {
    if (name == "idempotent") return ScalarFormat::Idempotent;
    if (name == "cartesian") return ScalarFormat::Cartesian;
    bad("unknown scalar format '" + name + "'");
}

Bicomplex scalar_from_json(const Json& j) {
    if (j.is_number()) return Bicomplex(Complex(j.get<double>()), Complex(j.get<double>()));
    if (!j.is_object()) bad("scalar must be a JSON object");
    if (j.contains("e1") || j.contains("e2")) {
        if (!j.contains("e1") || !j.contains("e2")) bad("idempotent scalar needs both 'e1' and 'e2'");
        return {complex_from_json(j["e1"]), complex_from_json(j["e2"])};
    }
    if (j.contains("w")) {
        const Json& w = j["w"];
        if (!w.is_array() || w.size() != 4) bad("cartesian scalar 'w' must have 4 entries");
        return Bicomplex::from_reals({number(w[0], "w"), number(w[1], "w"), number(w[2], "w"), number(w[3], "w")});
    }
    if (j.contains("h")) {
        const Json& h = j["h"];
        if (!h.is_array() || h.size() != 2) bad("hyperbolic scalar 'h' must have 2 entries");
        return Hyperbolic::from_cartesian(number(h[0], "h"), number(h[1], "h"));
    }
    bad("scalar object needs 'e1'/'e2', 'w' or 'h'");
}

BCVector vector_from_json(const Json& j) {
    if (!j.is_object()) bad("vector must be a JSON object");
    const std::size_t dim = count(j, "dim");
    if (!j.contains("e1") || !j.contains("e2")) bad("vector needs 'e1' and 'e2'");
    return {complex_vector(j["e1"], dim, "e1"), complex_vector(j["e2"], dim, "e2")};
}

BCMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) bad("matrix must be a JSON object");
    if (j.contains("w")) {
        const Json& w = j["w"];
        if (!w.is_array() || w.empty() || !w[0].is_array() || w[0].empty()) bad("cartesian matrix 'w' is empty");
        const std::size_t rows = w.size();
        const std::size_t cols = w[0].size();
        Eigen::MatrixXcd m1(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        Eigen::MatrixXcd m2(m1.rows(), m1.cols());
        for (std::size_t r = 0; r < rows; ++r) {
            if (!w[r].is_array() || w[r].size() != cols) bad("cartesian matrix rows differ in length");
            for (std::size_t c = 0; c < cols; ++c) {
                const Bicomplex z = scalar_from_json(Json{{"w", w[r][c]}});
                m1(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z.z1();
                m2(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z.z2();
            }
        }
        return {std::move(m1), std::move(m2)};
    }
    const std::size_t rows = count(j, "rows");
    const std::size_t cols = count(j, "cols");
    if (!j.contains("e1") || !j.contains("e2")) bad("matrix needs 'e1' and 'e2'");
    return {complex_matrix(j["e1"], rows, cols, "e1"), complex_matrix(j["e2"], rows, cols, "e2")};
}

std::vector<BCMatrix> family_from_json(const Json& j) {
    const Json& list = j.is_object() && j.contains("family") ? j["family"] : j;
    if (!list.is_array()) bad("family must be an array of matrices");
    std::vector<BCMatrix> out;
    for (const auto& m : list) out.push_back(matrix_from_json(m));
    return out;
}

TermSource series_from_json(const Json& j) {
    if (j.is_array()) {
        std::vector<BCVector> terms;
        for (const auto& v : j) terms.push_back(vector_from_json(v));
        return finite_terms(std::move(terms));
    }
    if (j.is_object() && j.value("kind", "") == "geometric") {
        if (!j.contains("ratio") || !j.contains("seed_vector")) bad("geometric series needs 'ratio' and 'seed_vector'");
        return geometric_terms(scalar_from_json(j["ratio"]), vector_from_json(j["seed_vector"]));
    }
    bad("series must be an array of vectors or a {\"kind\":\"geometric\"} generator");
}

Json to_json(const Bicomplex& z, ScalarFormat fmt) {
    if (fmt == ScalarFormat::Cartesian) {
        const auto r = z.to_reals();
        return Json{{"w", Json::array({r[0], r[1], r[2], r[3]})}};
    }
    return Json{{"e1", complex_to_json(z.z1())}, {"e2", complex_to_json(z.z2())}};
}

Json to_json(const Hyperbolic& h, ScalarFormat fmt) { return to_json(Bicomplex(h), fmt); }

Json to_json(const BCVector& v) {
    Json e1 = Json::array(), e2 = Json::array();
    for (Eigen::Index i = 0; i < v.v1().size(); ++i) {
        e1.push_back(complex_to_json(v.v1()(i)));
        e2.push_back(complex_to_json(v.v2()(i)));
    }
    return Json{{"dim", v.dim()}, {"e1", std::move(e1)}, {"e2", std::move(e2)}};
}

Json to_json(const BCMatrix& t) {
    Json e1 = Json::array(), e2 = Json::array();
    for (Eigen::Index r = 0; r < t.m1().rows(); ++r) {
        Json row1 = Json::array(), row2 = Json::array();
        for (Eigen::Index c = 0; c < t.m1().cols(); ++c) {
            row1.push_back(complex_to_json(t.m1()(r, c)));
            row2.push_back(complex_to_json(t.m2()(r, c)));
        }
        e1.push_back(std::move(row1));
        e2.push_back(std::move(row2));
    }
    return Json{{"rows", t.rows()}, {"cols", t.cols()}, {"e1", std::move(e1)}, {"e2", std::move(e2)}};
}

Json to_json(const OperatorNormReport& r, ScalarFormat fmt) {
    return Json{{"M", to_json(r.m.value(), fmt)},
                {"sigma_max", Json::array({r.sigma_max1, r.sigma_max2})},
                {"method", r.method},
                {"iterations", r.iterations},
                {"tol", r.tol}};
}

Json to_json(const SolveReport& r, ScalarFormat fmt) {
    return Json{{"x", to_json(r.x)}, {"qy", to_json(r.qy.value(), fmt)}, {"residual", to_json(r.residual.value(), fmt)}};
}

Json to_json(const SurjectivityReport& r) {
    return Json{{"surjective", r.surjective}, {"rows", r.rows}, {"rank", Json::array({r.rank1, r.rank2})}};
}

Json to_json(const SeriesReport& r, ScalarFormat fmt) {
    std::vector<DPlus> partial_norms;
    for (const auto& s : r.partial_sums) partial_norms.push_back(vec_dnorm(s));
    Json out{{"terms_used", r.terms_used},
             {"converged", r.converged},
             {"tol", to_json(r.tol.value(), fmt)},
             {"tail_estimate", to_json(r.tail_estimate.value(), fmt)},
             {"limit", r.limit ? to_json(*r.limit) : Json()},
             {"partial_sum_norms", hyp_list(partial_norms, fmt)},
             {"abs_sums", hyp_list(r.abs_sums, fmt)}};
    if (r.cauchy_pairs_checked > 0) {
        out["abs_converged"] = r.abs_converged;
        out["cauchy_pairs_checked"] = r.cauchy_pairs_checked;
        out["cauchy_margin"] = Json::array({r.cauchy_margin.a1(), r.cauchy_margin.a2()});
        out["cauchy_chain_ok"] = r.cauchy_chain_ok;
    }
    return out;
}

Json to_json(const ContinuityReport& r, ScalarFormat fmt) {
    return Json{{"alpha_star", to_json(r.alpha_star.value(), fmt)},
                {"alpha", to_json(r.alpha.value(), fmt)},
                {"trials", r.trials},
                {"worst_margin", Json::array({r.worst_margin.a1(), r.worst_margin.a2()})},
                {"all_ok", r.all_ok},
                {"worst_sequence_margin", Json::array({r.worst_sequence_margin.a1(), r.worst_sequence_margin.a2()})},
                {"sequence_check", r.sequence_check},
                {"witness_tight", r.witness_tight}};
}

Json to_json(const SubadditivityReport& r, ScalarFormat fmt) {
    return Json{{"terms_used", r.terms_used},
                {"sum_p", to_json(r.sum_p.value(), fmt)},
                {"p_limit", to_json(r.p_limit.value(), fmt)},
                {"worst_margin", Json::array({r.worst_margin.a1(), r.worst_margin.a2()})},
                {"partial_sums_ok", r.partial_sums_ok},
                {"limit_ok", r.limit_ok},
                {"all_ok", r.all_ok}};
}

Json to_json(const BallScalingReport& r, ScalarFormat fmt) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back(Json{{"delta", e.delta},
                               {"worst_margin", Json::array({e.worst_margin.a1(), e.worst_margin.a2()})},
                               {"ok", e.ok}});
    }
    return Json{{"alpha", to_json(r.alpha.value(), fmt)},
                {"r", r.r},
                {"samples", r.samples},
                {"closure", "tolerance ball"},
                {"hypothesis_margin", Json::array({r.hypothesis_margin.a1(), r.hypothesis_margin.a2()})},
                {"entries", std::move(entries)},
                {"all_ok", r.all_ok}};
}

Json to_json(const ZabreikoTrace& r, ScalarFormat fmt) {
    std::vector<DPlus> remainder_norms;
    for (const auto& u : r.remainders) remainder_norms.push_back(vec_dnorm(u));
    Json terms = Json::array();
    for (const auto& x : r.x_terms) terms.push_back(to_json(x));
    return Json{{"m", to_json(r.m.value(), fmt)},
                {"r", r.r},
                {"eps", to_json(r.eps.value(), fmt)},
                {"alpha_star", to_json(r.alpha_star.value(), fmt)},
                {"terms", r.x_terms.size()},
                {"stop_reason", r.stop_reason},
                {"epsilons", hyp_list(r.epsilons, fmt)},
                {"p_terms", hyp_list(r.p_terms, fmt)},
                {"remainder_norms", hyp_list(remainder_norms, fmt)},
                {"tail_bounds", hyp_list(r.tail_bounds, fmt)},
                {"p_x", to_json(r.p_x.value(), fmt)},
                {"budget", to_json(r.budget.value(), fmt)},
                {"final_bound", to_json(r.final_bound.value(), fmt)},
                {"x_terms", std::move(terms)},
                {"invariants_ok", r.invariants_ok},
                {"final_bound_ok", r.final_bound_ok}};
}

Json to_json(const UBPReport& r, ScalarFormat fmt) {
    Json sups = Json::array();
    for (const auto& s : r.pointwise_sups) sups.push_back(to_json(s, fmt));
    return Json{{"family_size", r.family_size},
                {"sample_count", r.sample_count},
                {"op_norms", hyp_list(r.op_norms, fmt)},
                {"sup_opnorm", to_json(r.sup_opnorm.value(), fmt)},
                {"bound_delta", to_json(r.bound_delta.value(), fmt)},
                {"member_margin", Json::array({r.member_margin.a1(), r.member_margin.a2()})},
                {"bound_margin", Json::array({r.bound_margin.a1(), r.bound_margin.a2()})},
                {"pointwise_sups", std::move(sups)},
                {"members_ok", r.members_ok},
                {"bounds_ok", r.bounds_ok},
                {"all_bounds_ok", r.all_bounds_ok}};
}

Json to_json(const OpenMappingReport& r, ScalarFormat fmt) {
    const auto& q = r.quotient;
    return Json{{"delta", to_json(r.delta.value(), fmt)},
                {"delta_checked", to_json(r.delta_checked.value(), fmt)},
                {"trials", r.trials},
                {"worst_residual", Json::array({r.worst_residual.a1(), r.worst_residual.a2()})},
                {"worst_bound_margin", Json::array({r.worst_bound_margin.a1(), r.worst_bound_margin.a2()})},
                {"solves_ok", r.solves_ok},
                {"bounds_ok", r.bounds_ok},
                {"witness_ratio", to_json(r.witness_ratio.value(), fmt)},
                {"delta_minimal", r.delta_minimal},
                {"quotient_series",
                 Json{{"terms", q.terms},
                      {"eps", to_json(q.eps.value(), fmt)},
                      {"q_sum", to_json(q.q_sum.value(), fmt)},
                      {"q_of_sum", to_json(q.q_of_sum.value(), fmt)},
                      {"preimage_norm_sum", to_json(q.preimage_norm_sum.value(), fmt)},
                      {"margin", Json::array({q.margin.a1(), q.margin.a2()})},
                      {"ok", q.ok}}},
                {"all_ok", r.all_ok}};
}

std::string dump_canonical(const Json& j) {
    std::string out;
    write_canonical(j, out, 0);
    out += '\n';
    return out;
}

}  // namespace hyplab
