#ifndef VARPHRAGMEN_CLI_HPP
#define VARPHRAGMEN_CLI_HPP

// Command dispatch for the `varphragmen` tool. Exit codes: 0 success,
// 1 a check that did not pass, 2 bad input (flags, profile text),
// 3 a well-formed but infeasible request.

#include "varphragmen/analysis.hpp"
#include "varphragmen/engine.hpp"
#include "varphragmen/render.hpp"
#include "varphragmen/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace varphragmen::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_infeasible = 3;

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw ProfileError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline OutputKind parse_format(const std::string& s) {
    if (s == "table") return OutputKind::table;
    if (s == "csv") return OutputKind::csv;
    if (s == "json") return OutputKind::json;
    throw ProfileError("unknown format '" + s + "'");
}

inline Rational require_number(const std::string& flag, const std::string& text) {
    auto v = parse_number(text);
    if (!v) throw ProfileError("malformed " + flag + " '" + text + "'");
    return *v;
}

/// `from:to:steps`
inline std::vector<Rational> parse_alphas(const std::string& spec) {
    auto a = spec.find(':');
    auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos) throw ProfileError("malformed --alphas '" + spec + "', expected from:to:steps");
    const Rational from = require_number("--alphas", spec.substr(0, a));
    const Rational to = require_number("--alphas", spec.substr(a + 1, b - a - 1));
    const auto steps = parse_fraction(spec.substr(b + 1));
    if (!steps || boost::multiprecision::denominator(*steps) != 1 || *steps < 1)
        throw ProfileError("malformed --alphas steps in '" + spec + "'");
    if (from < 0 || to > 1 || from > to) throw ProfileError("--alphas must satisfy 0 <= from <= to <= 1");
    return alpha_grid(from, to, steps->convert_to<int>());
}

struct ElectOptions {
    std::string method = "var-phragmen";
    std::string mode = "candidate";
    std::string backend = "exact";
    std::string format = "table";
    int seats = 0;
    int decimals = 4;
    bool trace = false;
    bool show_uncorrected = false;
    std::string path;
};

template <class T>
void emit_election(const Profile& profile, const BasicProfile<T>& computed, const MethodConfig& config,
                   const ElectOptions& o, std::ostream& out) {
    const auto result = run_election(computed, config);
    switch (parse_format(o.format)) {
    case OutputKind::json:
        out << to_json(profile, result, o.decimals, config.backend).dump(2) << '\n';
        break;
    case OutputKind::csv:
        out << render_csv(profile, result, o.decimals);
        break;
    case OutputKind::table:
        if (o.show_uncorrected) {
            out << "uncorrected\n" << render_trace_table(profile, result, o.decimals, true) << "\ncorrected\n";
            out << render_trace_table(profile, result, o.decimals);
        } else if (o.trace) {
            out << render_trace_table(profile, result, o.decimals);
        } else {
            out << render_counts_table(result);
        }
        break;
    }
}

inline int cmd_elect(const ElectOptions& o, std::istream& in, std::ostream& out) {
    const Profile profile = parse_profile(read_source(o.path, in));
    const MethodConfig config{parse_method(o.method), parse_mode(o.mode), o.seats,
                              o.backend == "float64" ? Backend::float64 : Backend::exact};
    if (o.decimals < 1) throw ProfileError("--decimals must be at least 1");
    if (config.backend == Backend::exact)
        emit_election(profile, profile, config, o, out);
    else
        emit_election(profile, profile.convert<double>(), config, o, out);
    return exit_ok;
}

struct ProbeOptions {
    std::string party;
    int seats = 0;
    std::string delta = "1";
    std::string path;
};

inline int cmd_probe(const ProbeOptions& o, std::istream& in, std::ostream& out) {
    const Profile profile = parse_profile(read_source(o.path, in));
    const Rational delta = require_number("--delta", o.delta);
    if (!CandidateId::valid(o.party)) throw ElectionError("unknown party '" + o.party + "'");
    out << render_probe(monotonicity_probe(profile, CandidateId(o.party), o.seats, delta));
    return exit_ok;
}

struct SweepOptions {
    std::string zeta = "0";
    int seats = 0;
    std::string alphas = "0:1:100";
    std::string backend = "float64";
    std::string out_path;
    int decimals = 4;
};

inline int cmd_sweep(const SweepOptions& o, std::ostream& out) {
    const Rational zeta = require_number("--zeta", o.zeta);
    const auto alphas = parse_alphas(o.alphas);
    if (o.decimals < 1) throw ProfileError("--decimals must be at least 1");
    const auto sweep =
        sweep_two_party(zeta, alphas, o.seats, o.backend == "exact" ? Backend::exact : Backend::float64);
    const std::string csv = render_sweep_csv(sweep, o.decimals);
    if (o.out_path.empty() || o.out_path == "-") {
        out << csv;
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw ProfileError("cannot write '" + o.out_path + "'");
        f << csv;
        out << "wrote " << sweep.points.size() << " rows to " << o.out_path << '\n';
    }
    return exit_ok;
}

struct CheckOptions {
    std::uint64_t seed = 1;
    int trials = 200;
    std::string out_dir = "findings";
};

inline int cmd_closed_list_equiv(const CheckOptions& o, std::ostream& out) {
    const auto report = check_closed_list_equivalence(o.seed, o.trials);
    out << "var-phragmen vs sainte-lague: " << report.sainte_lague_pass << "/" << report.trials << "\n";
    out << "seq-phragmen vs dhondt: " << report.dhondt_pass << "/" << report.trials << "\n";
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
        auto p = write_counterexample(o.out_dir, "closed-list-" + std::to_string(i + 1), report.counterexamples[i]);
        out << "saved " << p.string() << '\n';
    }
    if (report.all_passed()) {
        out << report.trials << "/" << report.trials << " OK\n";
        return exit_ok;
    }
    out << "FAIL\n";
    return exit_check_failed;
}

inline int cmd_oracle_agreement(const CheckOptions& o, std::ostream& out) {
    const auto report = oracle_agreement_campaign(o.seed, o.trials);
    out << "trials: " << report.trials << "\n"
        << "subproblems compared: " << report.comparisons << "\n"
        << "needing correction: " << report.corrected << "\n"
        << "three-way agreement: " << report.agreements << "/" << report.comparisons << "\n";
    for (std::size_t i = 0; i < report.disagreements.size(); ++i) {
        auto p = write_counterexample(o.out_dir, "oracle-" + std::to_string(i + 1), report.disagreements[i]);
        out << "DISAGREEMENT saved " << p.string() << '\n';
        for (const auto& line : report.disagreements[i].trace) out << "  " << line << '\n';
    }
    return exit_ok;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sequential Phragmén elections with a variance criterion"};
    app.require_subcommand(1);

    detail::ElectOptions eo;
    auto* elect = app.add_subcommand("elect", "run an election on a profile file");
    elect->add_option("--method", eo.method)
        ->check(CLI::IsMember({"var-phragmen", "seq-phragmen", "sainte-lague", "dhondt"}));
    elect->add_option("--seats", eo.seats)->required();
    elect->add_option("--mode", eo.mode)->check(CLI::IsMember({"candidate", "party"}));
    elect->add_option("--backend", eo.backend)->check(CLI::IsMember({"exact", "float64"}));
    elect->add_option("--format", eo.format)->check(CLI::IsMember({"table", "csv", "json"}));
    elect->add_option("--decimals", eo.decimals);
    elect->add_flag("--trace", eo.trace, "one row per seat with the share of each voter type");
    elect->add_flag("--show-uncorrected", eo.show_uncorrected, "also print shares before clamping");
    elect->add_option("profile", eo.path, "profile file, or - for stdin")->required();

    detail::ProbeOptions po;
    auto* probe = app.add_subcommand("probe", "support-monotonicity probe");
    probe->add_option("--party", po.party)->required();
    probe->add_option("--seats", po.seats)->required();
    probe->add_option("--delta", po.delta);
    probe->add_option("profile", po.path)->required();

    detail::SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "two-party seat share as a function of alpha");
    sweep->add_option("--zeta", so.zeta);
    sweep->add_option("--seats", so.seats)->required();
    sweep->add_option("--alphas", so.alphas, "from:to:steps");
    sweep->add_option("--backend", so.backend)->check(CLI::IsMember({"exact", "float64"}));
    sweep->add_option("--out", so.out_path);
    sweep->add_option("--decimals", so.decimals);

    detail::CheckOptions co;
    auto* check = app.add_subcommand("check", "randomized verification campaigns");
    check->require_subcommand(1);
    auto* equiv = check->add_subcommand("closed-list-equiv", "variance rule vs Sainte-Laguë, max-load vs D'Hondt");
    auto* oracle = check->add_subcommand("oracle-agreement", "clamp-and-resolve vs exact minimizers");
    for (auto* sub : {equiv, oracle}) {
        sub->add_option("--seed", co.seed);
        sub->add_option("--trials", co.trials);
        sub->add_option("--out-dir", co.out_dir, "where disagreeing instances are written");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (*elect) return detail::cmd_elect(eo, in, out);
        if (*probe) return detail::cmd_probe(po, in, out);
        if (*sweep) return detail::cmd_sweep(so, out);
        if (*equiv) return detail::cmd_closed_list_equiv(co, out);
        if (*oracle) return detail::cmd_oracle_agreement(co, out);
    } catch (const ProfileError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const ElectionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_infeasible;
    }
    return exit_bad_input;
}

/// Convenience overload for tests: arguments exclude the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"varphragmen"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

} // namespace varphragmen::cli

#endif // VARPHRAGMEN_CLI_HPP
