// beatty-lab: batch experiment driver for Beatty-set summatory functions.
//
// Subcommands: sieve, membership, decompose, error-curve, q-energy,
// maximal-l2, lil, lower-bound, carleson-check.  Every output is a pure
// function of the parsed configuration and the master seed; CSV files start
// with a `# beatty-lab v<version> seed=<seed> cmd=<canonical args>` comment
// and JSON files carry the same metadata fields.
//
// Exit codes: 0 success, 2 configuration error, 3 computation error.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "beatty/alpha_value.hpp"
#include "beatty/beatty_set.hpp"
#include "beatty/bigfloat.hpp"
#include "beatty/checkpoints.hpp"
#include "beatty/decomposition.hpp"
#include "beatty/errors.hpp"
#include "beatty/format.hpp"
#include "beatty/function_table.hpp"
#include "beatty/lil.hpp"
#include "beatty/rng.hpp"
#include "beatty/sawtooth.hpp"
#include "beatty/spectral.hpp"
#include "beatty/table_io.hpp"
#include "beatty/version.hpp"

namespace {

using beatty::AlphaValue;
using beatty::Error;
using beatty::ErrorCategory;

// One output cell; doubles render shortest-round-trip, NaN renders as an
// empty CSV cell / JSON null.
struct Cell {
    std::variant<std::int64_t, double, std::string> value;

    static Cell of(std::int64_t v) { return Cell{v}; }
    static Cell of(double v) { return Cell{v}; }
    static Cell of(std::string v) { return Cell{std::move(v)}; }
};

struct Document {
    std::string canonical_cmd;
    std::uint64_t seed = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string cell_to_csv(const Cell& c) {
    if (std::holds_alternative<std::int64_t>(c.value)) {
        return beatty::format_int(std::get<std::int64_t>(c.value));
    }
    if (std::holds_alternative<double>(c.value)) {
        const double d = std::get<double>(c.value);
        if (std::isnan(d)) return "";
        return beatty::format_double(d);
    }
    const std::string& s = std::get<std::string>(c.value);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

nlohmann::json cell_to_json(const Cell& c) {
    if (std::holds_alternative<std::int64_t>(c.value)) {
        return std::get<std::int64_t>(c.value);
    }
    if (std::holds_alternative<double>(c.value)) {
        const double d = std::get<double>(c.value);
        if (std::isnan(d)) return nullptr;
        return d;
    }
    return std::get<std::string>(c.value);
}

void emit(const Document& doc, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "csv") {
        body << "# beatty-lab v" << beatty::kVersion << " seed=" << doc.seed
             << " cmd=" << doc.canonical_cmd << "\n";
        for (std::size_t i = 0; i < doc.columns.size(); ++i) {
            body << (i ? "," : "") << doc.columns[i];
        }
        body << "\n";
        for (const auto& row : doc.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                body << (i ? "," : "") << cell_to_csv(row[i]);
            }
            body << "\n";
        }
    } else {
        nlohmann::json j;
        j["version"] = beatty::kVersion;
        j["seed"] = doc.seed;
        j["cmd"] = doc.canonical_cmd;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : doc.rows) {
            nlohmann::json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                obj[doc.columns[i]] = cell_to_json(row[i]);
            }
            rows.push_back(std::move(obj));
        }
        j["rows"] = std::move(rows);
        body << j.dump(2) << "\n";
    }

    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCategory::IoError, "cannot write '" + out_path + "'");
        out << body.str();
    }
}

// Canonical command string: subcommand plus computation-relevant flags in
// alphabetical order (presentation flags --out/--format excluded).
std::string canonical(const std::string& sub,
                      const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string s = sub;
    for (const auto& [k, v] : kv) {
        s += " --" + k + " " + v;
    }
    return s;
}

struct CommonOpts {
    std::uint64_t seed = 42;
    int precision = 50;
    std::string out;
    std::string format = "csv";
    bool json_flag = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "master seed (default 42)");
        cmd->add_option("--precision", precision,
                        "working precision in decimal digits (>= 30, default 50)")
            ->check(CLI::Range(30, 10000));
        cmd->add_option("--out", out, "output path (default stdout)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--json", json_flag, "shorthand for --format json");
    }

    std::string effective_format() const { return json_flag ? "json" : format; }
};

Cell nan_or(const std::optional<double>& v) {
    return Cell::of(v ? *v : std::numeric_limits<double>::quiet_NaN());
}

int run(int argc, char** argv) {
    CLI::App app{"beatty-lab: summatory functions on Beatty sets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("beatty-lab v") + beatty::kVersion);

    // ---- sieve ----
    auto* sieve = app.add_subcommand("sieve", "tabulate an arithmetic function");
    CommonOpts sieve_opts;
    std::string sieve_f = "tau2";
    std::int64_t sieve_n = 0;
    sieve->add_option("--f", sieve_f, "function spec");
    sieve->add_option("--n", sieve_n, "table size")->required()->check(CLI::PositiveNumber);
    sieve_opts.attach(sieve);

    // ---- membership ----
    auto* membership = app.add_subcommand("membership", "Beatty window / membership");
    CommonOpts member_opts;
    std::string member_alpha, member_beta = "rat:0";
    std::int64_t member_x = 0, member_m = -1;
    membership->add_option("--alpha", member_alpha, "alpha spec")->required();
    membership->add_option("--beta", member_beta, "beta spec (default 0)");
    membership->add_option("--x", member_x, "window bound")->check(CLI::PositiveNumber);
    membership->add_option("--m", member_m, "single membership query");
    member_opts.attach(membership);

    // ---- decompose ----
    auto* decompose = app.add_subcommand("decompose", "exact sawtooth decomposition");
    CommonOpts dec_opts;
    std::string dec_f = "tau2", dec_alpha;
    std::int64_t dec_beta = 0, dec_x = 0;
    double dec_epsilon = 0.0;
    decompose->add_option("--f", dec_f, "function spec");
    decompose->add_option("--alpha", dec_alpha, "alpha spec")->required();
    decompose->add_option("--beta", dec_beta, "integer beta >= 0");
    decompose->add_option("--x", dec_x, "summation bound")->required()->check(
        CLI::PositiveNumber);
    decompose->add_option("--epsilon", dec_epsilon, "epsilon in the loglog exponent")
        ->check(CLI::NonNegativeNumber);
    dec_opts.attach(decompose);

    // ---- error-curve ----
    auto* curve = app.add_subcommand("error-curve", "error rows over a geometric grid");
    CommonOpts curve_opts;
    std::string curve_f = "tau2", curve_alpha, curve_beta = "rat:0";
    std::int64_t curve_xmax = 0, curve_xmin = 8;
    double curve_eps = 0.0, curve_factor = 1.1;
    curve->add_option("--f", curve_f, "function spec");
    curve->add_option("--alpha", curve_alpha, "alpha spec")->required();
    curve->add_option("--beta", curve_beta, "beta spec (default 0)");
    curve->add_option("--xmax", curve_xmax, "largest x")->required()->check(
        CLI::PositiveNumber);
    curve->add_option("--xmin", curve_xmin, "smallest x (default 8)")
        ->check(CLI::PositiveNumber);
    curve->add_option("--epsilon", curve_eps, "epsilon in the loglog exponent")
        ->check(CLI::NonNegativeNumber);
    curve->add_option("--grid-factor", curve_factor, "geometric checkpoint factor");
    curve_opts.attach(curve);

    // ---- q-energy ----
    auto* qenergy = app.add_subcommand("q-energy", "spectral coefficients and energy");
    CommonOpts q_opts;
    std::string q_f = "tau2";
    std::int64_t q_x = 0;
    qenergy->add_option("--f", q_f, "function spec");
    qenergy->add_option("--x", q_x, "polynomial size parameter")->required()->check(
        CLI::PositiveNumber);
    q_opts.attach(qenergy);

    // ---- maximal-l2 ----
    auto* ml2 = app.add_subcommand("maximal-l2", "maximal-operator Monte Carlo");
    CommonOpts ml2_opts;
    std::string ml2_f = "tau2";
    std::int64_t ml2_x = 0, ml2_ell = 0;
    int ml2_samples = 200;
    ml2->add_option("--X", ml2_x, "prefix bound")->required()->check(CLI::PositiveNumber);
    ml2->add_option("--f", ml2_f, "function spec");
    ml2->add_option("--ell", ml2_ell, "shift ell");
    ml2->add_option("--samples", ml2_samples, "Monte Carlo samples")
        ->check(CLI::Range(2, 1000000));
    ml2_opts.attach(ml2);

    // ---- lil ----
    auto* lil = app.add_subcommand("lil", "iterated-logarithm walk trajectories");
    CommonOpts lil_opts;
    std::string lil_lambda;
    std::int64_t lil_x = 0;
    int lil_seeds = 1;
    double lil_factor = 1.1;
    lil->add_option("--lambda", lil_lambda, "lambda spec in (0,1)")->required();
    lil->add_option("--X", lil_x, "walk length")->required()->check(CLI::PositiveNumber);
    lil->add_option("--seeds", lil_seeds, "number of seed streams")
        ->check(CLI::Range(1, 1000000));
    lil->add_option("--grid-factor", lil_factor, "geometric checkpoint factor");
    lil_opts.attach(lil);

    // ---- lower-bound ----
    auto* lower = app.add_subcommand("lower-bound", "LIL lower-bound witnesses");
    CommonOpts lower_opts;
    std::string lower_lambda;
    std::int64_t lower_x = 0;
    int lower_seeds = 20;
    lower->add_option("--lambda", lower_lambda, "lambda spec in (0,1)")->required();
    lower->add_option("--X", lower_x, "walk length")->required()->check(
        CLI::PositiveNumber);
    lower->add_option("--seeds", lower_seeds, "number of seed streams")
        ->check(CLI::Range(1, 1000000));
    lower_opts.attach(lower);

    // ---- carleson-check ----
    auto* carleson = app.add_subcommand("carleson-check", "maximal partial-sum check");
    CommonOpts car_opts;
    std::int64_t car_y = 64;
    int car_samples = 200;
    std::string car_kind = "sawtooth";
    carleson->add_option("--Y", car_y, "coefficient range")->check(CLI::PositiveNumber);
    carleson->add_option("--samples", car_samples, "Monte Carlo samples")
        ->check(CLI::Range(2, 1000000));
    carleson->add_option("--coeffs", car_kind, "coefficient family")
        ->check(CLI::IsMember({"sawtooth", "pm1", "single"}));
    car_opts.attach(carleson);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sieve->parsed()) {
        beatty::set_working_precision(sieve_opts.precision);
        if (sieve_opts.out.empty()) {
            throw Error(ErrorCategory::ConfigError, "sieve requires --out <file.blab>");
        }
        const beatty::FunctionTable t =
            beatty::load_or_sieve(sieve_f, sieve_n, sieve_opts.seed);
        beatty::write_blab(sieve_opts.out, t, beatty::tag_for_spec(sieve_f));
        std::cout << "sieved " << sieve_f << " n=" << sieve_n << " -> " << sieve_opts.out
                  << "\n";
        return 0;
    }

    if (membership->parsed()) {
        beatty::set_working_precision(member_opts.precision);
        const AlphaValue alpha = AlphaValue::parse(member_alpha, member_opts.precision);
        const AlphaValue beta = AlphaValue::parse(member_beta, member_opts.precision);
        Document doc;
        doc.seed = member_opts.seed;
        if (member_m >= 1) {
            doc.canonical_cmd = canonical(
                "membership", {{"alpha", alpha.to_spec_string()},
                               {"beta", beta.to_spec_string()},
                               {"m", beatty::format_int(member_m)},
                               {"precision", std::to_string(member_opts.precision)},
                               {"seed", std::to_string(member_opts.seed)}});
            doc.columns = {"m", "member"};
            doc.rows.push_back({Cell::of(member_m),
                                Cell::of(static_cast<std::int64_t>(
                                    beatty::beatty_member(member_m, alpha, beta)))});
        } else {
            if (member_x < 1) {
                throw Error(ErrorCategory::ConfigError, "membership needs --x or --m");
            }
            doc.canonical_cmd = canonical(
                "membership", {{"alpha", alpha.to_spec_string()},
                               {"beta", beta.to_spec_string()},
                               {"precision", std::to_string(member_opts.precision)},
                               {"seed", std::to_string(member_opts.seed)},
                               {"x", beatty::format_int(member_x)}});
            doc.columns = {"n", "element"};
            const beatty::BeattyWindow w = beatty::beatty_enumerate(alpha, beta, member_x);
            for (std::size_t i = 0; i < w.elements.size(); ++i) {
                doc.rows.push_back({Cell::of(static_cast<std::int64_t>(i + 1)),
                                    Cell::of(w.elements[i])});
            }
        }
        emit(doc, member_opts.effective_format(), member_opts.out);
        return 0;
    }

    if (decompose->parsed()) {
        beatty::set_working_precision(dec_opts.precision);
        const AlphaValue alpha = AlphaValue::parse(dec_alpha, dec_opts.precision);
        const beatty::FunctionTable f =
            beatty::load_or_sieve(dec_f, dec_x, dec_opts.seed);
        const beatty::DecompositionReport r =
            beatty::decomposition_report(f, alpha, dec_beta, dec_x, dec_epsilon);
        Document doc;
        doc.seed = dec_opts.seed;
        doc.canonical_cmd = canonical(
            "decompose", {{"alpha", alpha.to_spec_string()},
                          {"beta", std::to_string(dec_beta)},
                          {"epsilon", beatty::format_double(dec_epsilon)},
                          {"f", dec_f},
                          {"precision", std::to_string(dec_opts.precision)},
                          {"seed", std::to_string(dec_opts.seed)},
                          {"x", beatty::format_int(dec_x)}});
        doc.columns = {"alpha",           "beta",
                       "x",               "S_beatty_re",
                       "S_beatty_im",     "S_plain_re",
                       "S_plain_im",      "sigma0_re",
                       "sigma0_im",       "sigma1_re",
                       "sigma1_im",       "residual_def_re",
                       "residual_def_im", "residual_closed_re",
                       "residual_closed_im", "error_re",
                       "error_im",        "l2norm",
                       "normalized_error", "residual_bound"};
        doc.rows.push_back({Cell::of(alpha.to_spec_string()),
                            Cell::of(static_cast<std::int64_t>(dec_beta)),
                            Cell::of(r.x),
                            Cell::of(r.S_beatty.real()),
                            Cell::of(r.S_beatty.imag()),
                            Cell::of(r.S_plain.real()),
                            Cell::of(r.S_plain.imag()),
                            Cell::of(r.sigma0.real()),
                            Cell::of(r.sigma0.imag()),
                            Cell::of(r.sigma1.real()),
                            Cell::of(r.sigma1.imag()),
                            Cell::of(r.residual_def.real()),
                            Cell::of(r.residual_def.imag()),
                            Cell::of(r.residual_closed.real()),
                            Cell::of(r.residual_closed.imag()),
                            Cell::of(r.error.real()),
                            Cell::of(r.error.imag()),
                            Cell::of(r.l2_norm),
                            Cell::of(r.normalized_error),
                            Cell::of(r.residual_bound)});
        emit(doc, dec_opts.effective_format(), dec_opts.out);
        return 0;
    }

    if (curve->parsed()) {
        beatty::set_working_precision(curve_opts.precision);
        const AlphaValue alpha = AlphaValue::parse(curve_alpha, curve_opts.precision);
        const AlphaValue beta = AlphaValue::parse(curve_beta, curve_opts.precision);
        const beatty::FunctionTable f =
            beatty::load_or_sieve(curve_f, curve_xmax, curve_opts.seed);
        const auto grid =
            beatty::geometric_checkpoints(curve_xmin, curve_xmax, curve_factor);
        const auto rows = beatty::error_curve(f, alpha, beta, grid, curve_eps);
        Document doc;
        doc.seed = curve_opts.seed;
        doc.canonical_cmd = canonical(
            "error-curve", {{"alpha", alpha.to_spec_string()},
                            {"beta", beta.to_spec_string()},
                            {"epsilon", beatty::format_double(curve_eps)},
                            {"f", curve_f},
                            {"grid-factor", beatty::format_double(curve_factor)},
                            {"precision", std::to_string(curve_opts.precision)},
                            {"seed", std::to_string(curve_opts.seed)},
                            {"xmax", beatty::format_int(curve_xmax)},
                            {"xmin", beatty::format_int(curve_xmin)}});
        doc.columns = {"x",        "S_beatty", "S_plain",
                       "error_re", "error_im", "l2norm",
                       "normalized_error", "abs_normalized_error"};
        for (const auto& row : rows) {
            doc.rows.push_back({Cell::of(row.x), Cell::of(row.S_beatty.real()),
                                Cell::of(row.S_plain.real()), Cell::of(row.error.real()),
                                Cell::of(row.error.imag()), Cell::of(row.l2_norm),
                                nan_or(row.normalized_error),
                                Cell::of(row.abs_normalized_error)});
        }
        emit(doc, curve_opts.effective_format(), curve_opts.out);
        return 0;
    }

    if (qenergy->parsed()) {
        beatty::set_working_precision(q_opts.precision);
        const beatty::FunctionTable f = beatty::load_or_sieve(q_f, q_x, q_opts.seed);
        const beatty::SpectralEnergy e = beatty::q_coefficients(f, q_x);
        Document doc;
        doc.seed = q_opts.seed;
        doc.canonical_cmd =
            canonical("q-energy", {{"f", q_f},
                                   {"precision", std::to_string(q_opts.precision)},
                                   {"seed", std::to_string(q_opts.seed)},
                                   {"x", beatty::format_int(q_x)}});
        doc.columns = {"x", "J", "K", "n_coeffs", "energy", "abs_ratio"};
        const double ratio =
            q_x >= 8 ? beatty::abs_energy_ratio_from(e.energy, q_x, f.sup_proxy(q_x))
                     : std::numeric_limits<double>::quiet_NaN();
        doc.rows.push_back({Cell::of(e.x), Cell::of(e.j_max), Cell::of(e.k_max),
                            Cell::of(static_cast<std::int64_t>(e.coeffs.size())),
                            Cell::of(e.energy), Cell::of(ratio)});
        emit(doc, q_opts.effective_format(), q_opts.out);
        return 0;
    }

    if (ml2->parsed()) {
        beatty::set_working_precision(ml2_opts.precision);
        const beatty::FunctionTable f = beatty::load_or_sieve(ml2_f, ml2_x, ml2_opts.seed);
        const beatty::MaximalEstimate est =
            beatty::mc_maximal_l2(f, ml2_x, ml2_ell, ml2_samples, ml2_opts.seed);
        Document doc;
        doc.seed = ml2_opts.seed;
        doc.canonical_cmd = canonical(
            "maximal-l2", {{"X", beatty::format_int(ml2_x)},
                           {"ell", beatty::format_int(ml2_ell)},
                           {"f", ml2_f},
                           {"precision", std::to_string(ml2_opts.precision)},
                           {"samples", std::to_string(ml2_samples)},
                           {"seed", std::to_string(ml2_opts.seed)}});
        doc.columns = {"X",      "ell",       "samples",    "integral",
                       "stderr", "l2norm_sq", "loglogX_sq", "ratio"};
        doc.rows.push_back({Cell::of(est.x_max), Cell::of(est.ell),
                            Cell::of(static_cast<std::int64_t>(est.n_samples)),
                            Cell::of(est.integral_estimate), Cell::of(est.standard_error),
                            Cell::of(est.l2_sq), Cell::of(est.loglog_sq),
                            Cell::of(est.normalized_ratio)});
        emit(doc, ml2_opts.effective_format(), ml2_opts.out);
        return 0;
    }

    if (lil->parsed()) {
        beatty::set_working_precision(lil_opts.precision);
        const AlphaValue lambda = AlphaValue::parse(lil_lambda, lil_opts.precision);
        const auto grid = beatty::geometric_checkpoints(std::min<std::int64_t>(8, lil_x),
                                                        lil_x, lil_factor);
        const auto increments = beatty::sawtooth_increments(lambda, lil_x);
        Document doc;
        doc.seed = lil_opts.seed;
        doc.canonical_cmd = canonical(
            "lil", {{"X", beatty::format_int(lil_x)},
                    {"grid-factor", beatty::format_double(lil_factor)},
                    {"lambda", lambda.to_spec_string()},
                    {"precision", std::to_string(lil_opts.precision)},
                    {"seed", std::to_string(lil_opts.seed)},
                    {"seeds", std::to_string(lil_seeds)}});
        doc.columns = {"seed", "x", "S", "s_sq", "lil_stat"};
        for (int s = 0; s < lil_seeds; ++s) {
            const auto stream = beatty::stream_seed(lil_opts.seed,
                                                    static_cast<std::uint64_t>(s));
            const beatty::WalkTrajectory t = beatty::walk_from(
                lambda, increments, beatty::rademacher_signs(lil_x, stream),
                static_cast<std::uint64_t>(s), grid);
            for (std::size_t i = 0; i < t.checkpoints.size(); ++i) {
                doc.rows.push_back({Cell::of(static_cast<std::int64_t>(s)),
                                    Cell::of(t.checkpoints[i]), Cell::of(t.S[i]),
                                    Cell::of(t.s_sq[i]), Cell::of(t.lil_stat[i])});
            }
        }
        emit(doc, lil_opts.effective_format(), lil_opts.out);
        return 0;
    }

    if (lower->parsed()) {
        beatty::set_working_precision(lower_opts.precision);
        const AlphaValue lambda = AlphaValue::parse(lower_lambda, lower_opts.precision);
        if (lower_x < 16) {
            throw Error(ErrorCategory::ConfigError, "lower-bound needs --X >= 16");
        }
        const auto grid =
            beatty::geometric_checkpoints(std::min<std::int64_t>(8, lower_x), lower_x);
        const auto increments = beatty::sawtooth_increments(lambda, lower_x);
        Document doc;
        doc.seed = lower_opts.seed;
        doc.canonical_cmd = canonical(
            "lower-bound", {{"X", beatty::format_int(lower_x)},
                            {"lambda", lambda.to_spec_string()},
                            {"precision", std::to_string(lower_opts.precision)},
                            {"seed", std::to_string(lower_opts.seed)},
                            {"seeds", std::to_string(lower_seeds)}});
        doc.columns = {"seed", "x_star", "witness"};
        for (int s = 0; s < lower_seeds; ++s) {
            const auto stream = beatty::stream_seed(lower_opts.seed,
                                                    static_cast<std::uint64_t>(s));
            const beatty::WitnessResult w = beatty::witness_from(beatty::walk_from(
                lambda, increments, beatty::rademacher_signs(lower_x, stream),
                static_cast<std::uint64_t>(s), grid));
            doc.rows.push_back({Cell::of(static_cast<std::int64_t>(s)),
                                Cell::of(w.x_star), Cell::of(w.witness)});
        }
        emit(doc, lower_opts.effective_format(), lower_opts.out);
        return 0;
    }

    if (carleson->parsed()) {
        beatty::set_working_precision(car_opts.precision);
        std::vector<std::complex<double>> pos(static_cast<std::size_t>(car_y)),
            neg(static_cast<std::size_t>(car_y));
        if (car_kind == "sawtooth") {
            for (std::int64_t k = 1; k <= car_y; ++k) {
                const std::complex<double> c{0.0, 1.0 / (2.0 * M_PI * static_cast<double>(k))};
                pos[static_cast<std::size_t>(k - 1)] = c;
                neg[static_cast<std::size_t>(k - 1)] = conj(c);
            }
        } else if (car_kind == "pm1") {
            // coefficient signs use the reserved stream index 1e9+7
            beatty::Xoshiro256StarStar rng(
                beatty::stream_seed(car_opts.seed, 1'000'000'007ULL));
            for (std::int64_t k = 0; k < car_y; ++k) {
                pos[static_cast<std::size_t>(k)] = {static_cast<double>(rng.next_sign()), 0.0};
                neg[static_cast<std::size_t>(k)] = {static_cast<double>(rng.next_sign()), 0.0};
            }
        } else {  // single
            pos[0] = {1.0, 0.0};
        }
        const beatty::CarlesonCheck chk =
            beatty::carleson_hunt_check(pos, neg, car_samples, car_opts.seed);
        Document doc;
        doc.seed = car_opts.seed;
        doc.canonical_cmd = canonical(
            "carleson-check", {{"Y", beatty::format_int(car_y)},
                               {"coeffs", car_kind},
                               {"precision", std::to_string(car_opts.precision)},
                               {"samples", std::to_string(car_samples)},
                               {"seed", std::to_string(car_opts.seed)}});
        doc.columns = {"Y", "kind", "samples", "lhs", "stderr", "rhs", "ratio"};
        doc.rows.push_back(
            {Cell::of(chk.y_max), Cell::of(car_kind),
             Cell::of(static_cast<std::int64_t>(chk.n_samples)), Cell::of(chk.lhs_estimate),
             Cell::of(chk.standard_error), Cell::of(chk.rhs),
             Cell::of(chk.rhs > 0.0 ? chk.lhs_estimate / chk.rhs
                                    : std::numeric_limits<double>::quiet_NaN())});
        emit(doc, car_opts.effective_format(), car_opts.out);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: category=" << to_string(e.category())
                  << " message=" << e.message() << "\n";
        return e.category() == ErrorCategory::ConfigError ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: category=Internal message=" << e.what() << "\n";
        return 3;
    }
}
