#include "hyplab/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "hyplab/dmodule.hpp"
#include "hyplab/dop.hpp"
#include "hyplab/error.hpp"
#include "hyplab/json_io.hpp"
#include "hyplab/theoremlab.hpp"

namespace hyplab::cli {

namespace {

struct CliConfig {
    std::string subcommand;
    double tol = 1e-10;
    std::uint64_t seed = 42;
    std::size_t maxn = 1000;
    std::string output;
    std::string format = "idempotent";

    // Input files by option name.
    std::map<std::string, std::string> paths;

    std::string norm = "l2";
    std::string m, eps, alpha, delta;
    double r = 1.0;
    std::vector<double> deltas{0.5, 2.0, 10.0};
    std::size_t samples = 100;
    std::size_t trials = 1000;
    std::size_t window = 3;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotConverged:
        case ErrorKind::NoConvergence: return kNoConvergence;
        case ErrorKind::ZeroDivisor:
        case ErrorKind::NotStrictlyPositive:
        case ErrorKind::NotInRange:
        case ErrorKind::NotSurjective:
        case ErrorKind::HypothesisFailed:
        case ErrorKind::PreconditionViolated: return kPrecondition;
        case ErrorKind::NonFinite:
        case ErrorKind::EmptySet:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::ShapeMismatch:
        case ErrorKind::UnsupportedNorm:
        case ErrorKind::InvalidInput: return kInvalidInput;
    }
    return kInvalidInput;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorKind::InvalidInput, "SHA-256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// "a1,a2" idempotent components.
DPlus parse_dplus(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (text.empty() || comma == std::string::npos) {
        throw Error(ErrorKind::InvalidInput, std::string(what) + " must be given as a1,a2");
    }
    try {
        std::size_t used1 = 0, used2 = 0;
        const std::string first = text.substr(0, comma);
        const std::string second = text.substr(comma + 1);
        const double a1 = std::stod(first, &used1);
        const double a2 = std::stod(second, &used2);
        if (used1 != first.size() || used2 != second.size()) throw std::invalid_argument(text);
        return {a1, a2};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, std::string(what) + " must be given as a1,a2");
    }
}

std::optional<DPlus> parse_override(const std::string& text, const char* what) {
    if (text.empty()) return std::nullopt;
    return parse_dplus(text, what);
}

// Loaded inputs plus the digest over everything that determines the report.
class Inputs {
public:
    explicit Inputs(const CliConfig& cfg) : cfg_(cfg) {}

    Json json(const std::string& option) {
        const auto it = cfg_.paths.find(option);
        if (it == cfg_.paths.end() || it->second.empty()) {
            throw Error(ErrorKind::InvalidInput, "missing --" + option);
        }
        const std::string text = read_file(it->second);
        digest_ += option + '\0' + text + '\0';
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorKind::InvalidInput, "--" + option + ": " + e.what());
        }
    }

    void note(const std::string& name, const std::string& value) { digest_ += name + '\0' + value + '\0'; }

    std::string digest() const { return "sha256:" + sha256_hex(digest_); }

private:
    const CliConfig& cfg_;
    std::string digest_;
};

struct Outcome {
    Json payload;
    bool pass = true;
};

Outcome dispatch(const CliConfig& cfg, Inputs& in, ScalarFormat fmt) {
    const std::string& cmd = cfg.subcommand;
    if (cmd == "knorm") {
        const Bicomplex z = scalar_from_json(in.json("scalar"));
        return {Json{{"scalar", to_json(z, fmt)},
                     {"knorm", to_json(knorm(z).value(), fmt)},
                     {"euclid_norm", euclid_norm(z)}}};
    }
    if (cmd == "inv") {
        const Bicomplex z = scalar_from_json(in.json("scalar"));
        const Bicomplex zi = inverse(z);
        return {Json{{"scalar", to_json(z, fmt)}, {"inverse", to_json(zi, fmt)}, {"product", to_json(z * zi, fmt)}}};
    }
    if (cmd == "norm") {
        const BCVector v = vector_from_json(in.json("vector"));
        const DNormConfig norm{parse_component_norm(cfg.norm)};
        return {Json{{"component_norm", std::string(to_string(norm.component))},
                     {"dnorm", to_json(vec_dnorm(v, norm).value(), fmt)}}};
    }
    if (cmd == "opnorm") {
        return {to_json(op_dnorm(matrix_from_json(in.json("matrix")), cfg.tol), fmt)};
    }
    if (cmd == "solve") {
        const BCMatrix t = matrix_from_json(in.json("matrix"));
        const BCVector y = vector_from_json(in.json("vector"));
        return {to_json(min_norm_solve(t, y, cfg.tol), fmt)};
    }
    if (cmd == "omc") {
        const BCMatrix t = matrix_from_json(in.json("matrix"));
        const SurjectivityReport rank = surjectivity_check(t, cfg.tol);
        const DPlus delta = open_mapping_delta(t, cfg.tol);
        return {Json{{"surjectivity", to_json(rank)}, {"delta", to_json(delta.value(), fmt)}}};
    }
    if (cmd == "series") {
        const TermSource terms = series_from_json(in.json("series"));
        SeriesOptions opts{DPlus::real(cfg.tol), cfg.maxn, cfg.window};
        const SeriesReport report = abs_summability_check(terms, opts);
        if (!report.abs_converged) throw SeriesNotConverged(report);
        return {to_json(report, fmt), report.cauchy_chain_ok};
    }
    if (cmd == "zabreiko") {
        const BCMatrix t = matrix_from_json(in.json("matrix"));
        const BCVector x = vector_from_json(in.json("x"));
        const ZabreikoTrace trace = zabreiko_decompose(DSeminorm{t}, x, parse_dplus(cfg.m, "--m"), cfg.r,
                                                       parse_dplus(cfg.eps, "--eps"), cfg.maxn);
        return {to_json(trace, fmt), trace.invariants_ok && trace.final_bound_ok};
    }
    if (cmd == "ubp") {
        const UBPReport report = ubp_verify(family_from_json(in.json("family")), cfg.samples, cfg.seed,
                                            parse_override(cfg.delta, "--delta"));
        return {to_json(report, fmt), report.all_bounds_ok};
    }
    if (cmd == "omt-verify") {
        const OpenMappingReport report = open_mapping_verify(matrix_from_json(in.json("matrix")), cfg.trials,
                                                               cfg.seed, parse_override(cfg.delta, "--delta"));
        return {to_json(report, fmt), report.all_ok};
    }
    if (cmd == "lemma31") {
        const ContinuityReport report =
            continuity_bound_check(DSeminorm{matrix_from_json(in.json("matrix"))}, cfg.trials,
                                   cfg.seed, parse_override(cfg.alpha, "--alpha"));
        return {to_json(report, fmt), report.all_ok && report.sequence_check && report.witness_tight};
    }
    if (cmd == "subadd") {
        const DSeminorm p{matrix_from_json(in.json("matrix"))};
        const TermSource terms = series_from_json(in.json("series"));
        SeriesOptions opts{DPlus::real(cfg.tol), cfg.maxn, cfg.window};
        const SubadditivityReport report = countable_subadd_check(p, terms, opts);
        return {to_json(report, fmt), report.all_ok};
    }
    if (cmd == "ballscale") {
        const DSeminorm p{matrix_from_json(in.json("matrix"))};
        const BallScalingReport report =
            ball_scaling_check(p, parse_dplus(cfg.alpha, "--alpha"), cfg.r, cfg.deltas, cfg.samples, cfg.seed);
        return {to_json(report, fmt), report.all_ok};
    }
    throw Error(ErrorKind::InvalidInput, "unknown subcommand '" + cmd + "'");
}

Json envelope(const CliConfig& cfg, const std::string& digest, Json payload, bool pass) {
    return Json{{"tool", "hyplab"},
                {"version", kToolVersion},
                {"subcommand", cfg.subcommand},
                {"inputs_digest", digest},
                {"seed", cfg.seed},
                {"payload", std::move(payload)},
                {"pass", pass}};
}

int emit(const CliConfig& cfg, const Json& doc, std::ostream& out, std::ostream& err) {
    const std::string text = dump_canonical(doc);
    if (cfg.output.empty()) {
        out << text;
        out.flush();
        return 0;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        err << "hyplab: cannot write '" << cfg.output << "'\n";
        return kInvalidInput;
    }
    file << text;
    return 0;
}

void build_app(CLI::App& app, CliConfig& cfg) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", cfg.tol, "Numerical tolerance (rank cutoff, residual, series tail)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for all sampling");
    app.add_option("--maxn", cfg.maxn, "Term cap for series and decompositions")->check(CLI::PositiveNumber);
    app.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
    app.add_option("--format", cfg.format, "Scalar emission: idempotent or cartesian")
        ->check(CLI::IsMember({"idempotent", "cartesian"}));

    const auto file = [&cfg](CLI::App* sub, const std::string& name, const std::string& help) {
        sub->add_option("--" + name, cfg.paths[name], help)->required();
    };

    auto* knorm_cmd = app.add_subcommand("knorm", "Hyperbolic-valued modulus of a scalar");
    file(knorm_cmd, "scalar", "Scalar JSON");

    auto* inv_cmd = app.add_subcommand("inv", "Inverse of a bicomplex scalar");
    file(inv_cmd, "scalar", "Scalar JSON");

    auto* norm_cmd = app.add_subcommand("norm", "D-norm of a vector");
    file(norm_cmd, "vector", "Vector JSON");
    norm_cmd->add_option("--norm", cfg.norm, "Component norm")->check(CLI::IsMember({"l2", "l1", "linf"}));

    auto* opnorm_cmd = app.add_subcommand("opnorm", "Operator D-norm");
    file(opnorm_cmd, "matrix", "Matrix JSON");

    auto* solve_cmd = app.add_subcommand("solve", "Minimum-norm preimage and quotient seminorm q(y)");
    file(solve_cmd, "matrix", "Matrix JSON");
    file(solve_cmd, "vector", "Right-hand side vector JSON");

    auto* omc_cmd = app.add_subcommand("omc", "Open mapping constant");
    file(omc_cmd, "matrix", "Matrix JSON");

    auto* series_cmd = app.add_subcommand("series", "Sum a series and replay its Cauchy chain");
    file(series_cmd, "series", "Series JSON");
    series_cmd->add_option("--window", cfg.window, "Trailing terms in the tail estimate")
        ->check(CLI::PositiveNumber);

    auto* zab_cmd = app.add_subcommand("zabreiko", "Zabreiko decomposition trace");
    file(zab_cmd, "matrix", "Matrix JSON defining p(x) = ||Tx||_D");
    file(zab_cmd, "x", "Vector JSON to decompose");
    zab_cmd->add_option("--m", cfg.m, "Level m as a1,a2")->required();
    zab_cmd->add_option("--r", cfg.r, "Radius r")->required();
    zab_cmd->add_option("--eps", cfg.eps, "Budget eps as a1,a2")->required();

    auto* ubp_cmd = app.add_subcommand("ubp", "Uniform boundedness over a family");
    file(ubp_cmd, "family", "Family JSON");
    ubp_cmd->add_option("--samples", cfg.samples, "Random sample points")->check(CLI::NonNegativeNumber);
    ubp_cmd->add_option("--delta", cfg.delta, "Check this bound a1,a2 instead of the supremum of operator norms");

    auto* omt_cmd = app.add_subcommand("omt-verify", "Open mapping verification");
    file(omt_cmd, "matrix", "Matrix JSON");
    omt_cmd->add_option("--trials", cfg.trials, "Random right-hand sides")->check(CLI::NonNegativeNumber);
    omt_cmd->add_option("--delta", cfg.delta, "Check this constant a1,a2 instead of the exact one");

    auto* l31_cmd = app.add_subcommand("lemma31", "Continuity bound p(x) <= alpha ||x||_D");
    file(l31_cmd, "matrix", "Matrix JSON");
    l31_cmd->add_option("--trials", cfg.trials, "Random points")->check(CLI::PositiveNumber);
    l31_cmd->add_option("--alpha", cfg.alpha, "Check this constant a1,a2 instead of the operator D-norm");

    auto* sub_cmd = app.add_subcommand("subadd", "Countable subadditivity along a series");
    file(sub_cmd, "matrix", "Matrix JSON");
    file(sub_cmd, "series", "Series JSON");
    sub_cmd->add_option("--window", cfg.window, "Trailing terms in the tail estimate")->check(CLI::PositiveNumber);

    auto* ball_cmd = app.add_subcommand("ballscale", "Ball scaling of V_alpha");
    file(ball_cmd, "matrix", "Matrix JSON");
    ball_cmd->add_option("--alpha", cfg.alpha, "Level alpha as a1,a2")->required();
    ball_cmd->add_option("--r", cfg.r, "Radius r")->required();
    ball_cmd->add_option("--deltas", cfg.deltas, "Scaling factors")->delimiter(',');
    ball_cmd->add_option("--samples", cfg.samples, "Random sample points")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    if (const char* env = std::getenv("HYPLAB_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::logic_error&) {
            err << "hyplab: ignoring malformed HYPLAB_SEED '" << env << "'\n";
        }
    }

    CLI::App app{"Bicomplex and hyperbolic numerical checks", "hyplab"};
    build_app(app, cfg);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "hyplab: " << e.what() << '\n';
        const Json payload{{"error", Json{{"kind", "InvalidInput"}, {"message", e.what()}}}};
        emit(cfg, envelope(cfg, "", payload, false), out, err);
        return kInvalidInput;
    }
    for (const auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

    Inputs inputs(cfg);
    inputs.note("subcommand", cfg.subcommand);
    inputs.note("tol", format_double(cfg.tol));
    inputs.note("maxn", std::to_string(cfg.maxn));
    inputs.note("format", cfg.format);
    inputs.note("norm", cfg.norm);
    inputs.note("m", cfg.m);
    inputs.note("eps", cfg.eps);
    inputs.note("alpha", cfg.alpha);
    inputs.note("delta", cfg.delta);
    inputs.note("r", format_double(cfg.r));
    std::string deltas;
    for (double d : cfg.deltas) deltas += format_double(d) + ',';
    inputs.note("deltas", deltas);
    inputs.note("samples", std::to_string(cfg.samples));
    inputs.note("trials", std::to_string(cfg.trials));
    inputs.note("window", std::to_string(cfg.window));

    int code = kPass;
    Json payload;
    bool pass = false;
    try {
        const ScalarFormat fmt = parse_scalar_format(cfg.format);
        Outcome outcome = dispatch(cfg, inputs, fmt);
        payload = std::move(outcome.payload);
        pass = outcome.pass;
        code = pass ? kPass : kCheckFailed;
    } catch (const SeriesNotConverged& e) {
        err << "hyplab: " << e.what() << '\n';
        payload = Json{{"error", Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}},
                       {"report", to_json(e.report(), parse_scalar_format(cfg.format))}};
        code = exit_code_for(e.kind());
    } catch (const Error& e) {
        err << "hyplab: " << e.what() << '\n';
        payload = Json{{"error", Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        code = exit_code_for(e.kind());
    } catch (const Json::exception& e) {
        err << "hyplab: " << e.what() << '\n';
        payload = Json{{"error", Json{{"kind", "InvalidInput"}, {"message", e.what()}}}};
        code = kInvalidInput;
    }

    std::string digest;
    try {
        digest = inputs.digest();
    } catch (const Error& e) {
        err << "hyplab: " << e.what() << '\n';
    }
    const int write_code = emit(cfg, envelope(cfg, digest, std::move(payload), pass), out, err);
    return write_code != 0 ? write_code : code;
}

}  // namespace hyplab::cli
