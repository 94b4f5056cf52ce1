#ifndef CYCLOCODES_CLI_HPP
#define CYCLOCODES_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "codecore.hpp"
#include "constructions.hpp"
#include "cosets.hpp"
#include "distance.hpp"
#include "fixtures.hpp"
#include "report.hpp"

namespace cyclo {

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitMismatch = 2, kExitUsage = 64 };

/// Residues separated by whitespace or commas; '#' starts a comment.
inline std::vector<Residue> parse_residue_list(std::istream& in) {
    std::vector<Residue> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            require(used == tok.size() && tok[0] != '-', Errc::domain, "not a residue: '" + tok + "'");
            out.push_back(static_cast<Residue>(v));
        }
    }
    return out;
}

inline void write_elements(std::ostream& out, const std::vector<Residue>& elems) {
    for (auto x : elems) out << x << '\n';
}

namespace cli_detail {

struct ConstructionArgs {
    BuildRequest request;
    unsigned m = 0, p = 0, p1 = 0, p2 = 0, i = 0;
    std::string which = "C1";
    bool swap_pairs = false;
    std::vector<Residue> choose;
    std::vector<CLI::App*> subs;

    void attach(CLI::App* parent) {
        auto* even = parent->add_subcommand("even-m", "Z1/Z2 pair for even m");
        even->add_option("--m", m, "extension degree (even, >= 4)")->required();
        even->add_option("--which", which, "C1 or C2")->check(CLI::IsMember({"C1", "C2", "1", "2"}));
        even->add_flag("--swap-pairs", swap_pairs, "assign the smaller leader of each pair to P1");

        auto* two = parent->add_subcommand("two-prime", "m = 2p");
        two->add_option("--p", p, "odd prime")->required();

        auto* pq = parent->add_subcommand("odd-pq", "m = p1 p2, odd primes");
        pq->add_option("--p1", p1)->required();
        pq->add_option("--p2", p2)->required();

        auto* sq = parent->add_subcommand("sqrt", "square-root complement construction, odd m");
        sq->add_option("--m", m, "odd extension degree >= 5")->required();
        sq->add_option("--choose", choose, "representatives forced for residual pairs")->delimiter(',');

        auto* wc = parent->add_subcommand("weight-class", "weight-parity construction, odd m >= 9");
        wc->add_option("--m", m)->required();
        wc->add_option("--i", i, "class index 0 or 1")->required();

        subs = {even, two, pq, sq, wc};
        // Output flags written after the construction name belong to the parent command.
        for (auto* s : subs) s->fallthrough();
    }

    const CLI::App* chosen() const {
        for (auto* s : subs)
            if (s->parsed()) return s;
        return nullptr;
    }

    BuildRequest resolve() const {
        const auto* s = chosen();
        BuildRequest r;
        r.construction = s->get_name();
        if (r.construction == "even-m") {
            r.params = {{"m", m}, {"which", which == "C2" || which == "2" ? 2 : 1}, {"swap_pairs", swap_pairs}};
        } else if (r.construction == "two-prime") {
            r.params = {{"p", p}};
        } else if (r.construction == "odd-pq") {
            r.params = {{"p1", p1}, {"p2", p2}};
        } else if (r.construction == "sqrt") {
            r.params = {{"m", m}};
            r.overrides = choose;
        } else {
            r.params = {{"m", m}, {"i", i}};
        }
        return r;
    }
};

inline std::string join(const std::vector<Residue>& xs, std::size_t limit = 64) {
    std::ostringstream os;
    for (std::size_t k = 0; k < xs.size() && k < limit; ++k) os << (k ? " " : "") << xs[k];
    if (xs.size() > limit) os << " ... (" << xs.size() - limit << " more)";
    return os.str();
}

inline void print_audit(std::ostream& out, const ConstructionAudit& a) {
    for (const auto& [k, v] : a.values) out << "  " << k << " = " << v << '\n';
    for (const auto& [k, v] : a.sets) out << "  " << k << " (" << v.size() << "): " << join(v, 24) << '\n';
    for (const auto& c : a.checks) out << "  [" << (c.holds ? "ok" : "FAILED") << "] " << c.identity << '\n';
}

inline void print_distance(std::ostream& out, const char* label, const DistanceResult& d) {
    out << label;
    if (d.exact_distance)
        out << *d.exact_distance << " (exhaustive, " << d.iterations << " codewords)\n";
    else
        out << "<= " << d.best_weight_found << ", >= " << d.proven_lower_bound << " (search, seed " << d.seed << ", "
            << d.iterations << " iterations, depth " << d.depth << ")\n";
    out << "  witness " << bits_string(d.witness) << '\n';
}

}  // namespace cli_detail

/// Runs one command line (without the program name). Output goes to `out`, diagnostics to `err`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary cyclic codes of length 2^m - 1 from cyclotomic-coset constructions", "cyclocodes"};
    app.require_subcommand(1);

    // cosets
    auto* cosets_cmd = app.add_subcommand("cosets", "CSV of all 2-cyclotomic cosets mod 2^m - 1");
    unsigned cosets_m = 0;
    cosets_cmd->add_option("--m", cosets_m, "extension degree")->required();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "build a defining set");
    cli_detail::ConstructionArgs cargs;
    cargs.attach(construct_cmd);
    construct_cmd->require_subcommand(1);
    bool c_json = false, c_elements = false;
    construct_cmd->add_flag("--json", c_json, "emit the defining set and audit as JSON");
    construct_cmd->add_flag("--elements-only", c_elements, "emit the residues, one per line");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "assemble a code and report its parameters");
    cli_detail::ConstructionArgs aargs;
    aargs.attach(analyze_cmd);
    analyze_cmd->require_subcommand(0, 1);
    std::string input_path;
    unsigned input_m = 0;
    std::string engine = "auto";
    DistancePolicy policy;
    bool a_json = false, a_hex = false, a_audit = false, no_distance = false, dual_distance = false;
    analyze_cmd->add_option("--input", input_path, "file of residues (as written by --elements-only)");
    analyze_cmd->add_option("--m", input_m, "extension degree for --input");
    analyze_cmd->add_option("--engine", engine, "auto|exhaustive|search")
        ->check(CLI::IsMember({"auto", "exhaustive", "search"}));
    analyze_cmd->add_option("--budget", policy.budget, "largest dimension for exhaustive enumeration")
        ->capture_default_str();
    analyze_cmd->add_option("--seed", policy.seed, "search seed")->capture_default_str();
    analyze_cmd->add_option("--iters", policy.iterations, "search iterations")->capture_default_str();
    analyze_cmd->add_option("--depth", policy.depth, "information-set enumeration depth (1..3)")
        ->capture_default_str();
    analyze_cmd->add_option("--threads", policy.threads, "worker threads (0 = hardware)");
    analyze_cmd->add_flag("--json", a_json, "emit the JSON report");
    analyze_cmd->add_flag("--hex", a_hex, "polynomials as little-endian hex");
    analyze_cmd->add_flag("--audit", a_audit, "include the construction audit");
    analyze_cmd->add_flag("--no-distance", no_distance, "skip the distance engines");
    analyze_cmd->add_flag("--dual-distance", dual_distance, "also measure the dual code");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "rebuild the embedded fixtures and compare");
    std::vector<std::string> patterns;
    bool v_all = false, v_json = false;
    unsigned max_m = 0;
    VerifyOptions vopt;
    verify_cmd->add_option("--fixture", patterns, "fixture id or glob (repeatable)");
    verify_cmd->add_flag("--all", v_all, "include slow fixtures");
    verify_cmd->add_option("--max-m", max_m, "skip fixtures with larger m");
    verify_cmd->add_option("--threads", vopt.threads, "worker threads (0 = hardware)");
    verify_cmd->add_flag("--json", v_json, "emit outcomes as JSON");

    // export
    auto* export_cmd = app.add_subcommand("export", "dump the embedded fixtures as JSON");
    std::vector<std::string> export_patterns;
    bool list_only = false;
    export_cmd->add_option("--fixture", export_patterns, "fixture id or glob (repeatable)");
    export_cmd->add_flag("--list", list_only, "print fixture ids only");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cosets_cmd->parsed()) {
            const auto table = CosetTable::build(cosets_m);
            out << "leader,size,members\n";
            for (const auto& c : table.cosets()) {
                out << c.leader << ',' << c.size << ',';
                const auto mem = table.members(c.leader);
                for (std::size_t k = 0; k < mem.size(); ++k) out << (k ? ";" : "") << mem[k];
                out << '\n';
            }
            return kExitOk;
        }

        if (construct_cmd->parsed()) {
            const auto built = build(cargs.resolve());
            if (c_elements) {
                write_elements(out, built.set.elements);
            } else if (c_json) {
                nlohmann::json j = {{"schema", kSchemaVersion},
                                    {"defining_set", to_json(built.set)},
                                    {"audit", to_json(built.audit)}};
                out << j.dump(2) << '\n';
            } else {
                const auto& z = built.set;
                out << "construction " << z.origin.construction << "  n = " << z.n << "  |Z| = " << z.size()
                    << "  dimension " << z.n - z.size() << '\n';
                out << "elements: " << cli_detail::join(z.elements) << '\n';
                cli_detail::print_audit(out, built.audit);
            }
            if (!built.audit.all_hold()) {
                for (const auto& f : built.audit.failures()) err << "warning: audit identity failed: " << f << '\n';
                return kExitMismatch;
            }
            return kExitOk;
        }

        if (analyze_cmd->parsed()) {
            std::optional<ConstructionAudit> audit;
            DefiningSet z;
            if (aargs.chosen()) {
                require(input_path.empty(), Errc::domain, "--input and a construction are mutually exclusive");
                auto built = build(aargs.resolve());
                z = std::move(built.set);
                audit = std::move(built.audit);
            } else {
                require(!input_path.empty(), Errc::domain, "analyze needs a construction or --input FILE --m M");
                require(input_m != 0, Errc::domain, "--input needs --m");
                std::ifstream in(input_path);
                require(static_cast<bool>(in), Errc::domain, "cannot read " + input_path);
                auto elems = parse_residue_list(in);
                const Residue n = input_m <= kMaxExtension ? (Residue{1} << input_m) - 1 : 0;
                for (auto x : elems) require(x < n, Errc::domain, "residue " + std::to_string(x) + " outside Z_n");
                z = make_defining_set(input_m, std::move(elems), Origin{"input", {{"m", input_m}}, {}});
            }
            policy.engine = engine == "exhaustive" ? DistancePolicy::Engine::exhaustive
                            : engine == "search"   ? DistancePolicy::Engine::search
                                                   : DistancePolicy::Engine::automatic;

            const auto ctx = make_field(z.m);
            const auto code = assemble(ctx, z);
            const auto dcode = dual(ctx, code);
            Report report;
            report.code = make_code_report(code, dcode);
            if (a_audit) report.audit = audit;
            if (!no_distance && code.dimension > 0) report.distance = auto_distance(code, policy);
            if (dual_distance && dcode.dimension > 0) report.dual_distance = auto_distance(dcode, policy);

            if (a_json) {
                out << to_json(report, a_hex).dump(2) << '\n';
            } else {
                const auto& c = report.code;
                out << "code [" << c.n << ',' << c.dimension << "]  m = " << c.m << "  construction "
                    << c.origin.construction << '\n';
                out << "defining set (" << c.defining_set.size() << "): " << cli_detail::join(c.defining_set) << '\n';
                out << "generator " << (a_hex ? c.generator.to_hex() : c.generator.to_bits()) << '\n';
                if (c.defining_set.size() < c.n)
                    out << "bch bound " << c.bch_lower_bound << " (run from " << c.bch_interval_start << ")\n";
                out << "dual [" << c.n << ',' << c.dual.dimension << "]  bch bound " << c.dual.bch_lower_bound
                    << " (run from " << c.dual.bch_interval_start << ")\n";
                if (report.distance) cli_detail::print_distance(out, "distance ", *report.distance);
                if (report.dual_distance) cli_detail::print_distance(out, "dual distance ", *report.dual_distance);
                if (report.audit) cli_detail::print_audit(out, *report.audit);
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            std::vector<const Fixture*> selected;
            for (const auto& f : paper_fixtures()) {
                bool named = false;
                for (const auto& p : patterns) named = named || fixture_matches(f.id, p);
                if (!patterns.empty() && !named) continue;
                if (f.slow && !v_all && !named) continue;
                if (max_m != 0 && static_cast<unsigned>(std::bit_width(f.n)) > max_m) continue;
                selected.push_back(&f);
            }
            if (selected.empty()) {
                err << "warning: no fixtures selected\n";
                return kExitOk;
            }
            bool all_pass = true;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto* f : selected) {
                const auto o = verify_fixture(*f, vopt);
                all_pass = all_pass && o.passed;
                if (v_json) {
                    rows.push_back({{"id", o.id}, {"passed", o.passed}, {"summary", o.summary},
                                    {"mismatches", o.mismatches}});
                    continue;
                }
                out << (o.passed ? "PASS " : "FAIL ") << o.id << "  " << o.summary << "  (" << f->source << ")\n";
                for (const auto& mm : o.mismatches) out << "    " << mm << '\n';
            }
            if (v_json) out << rows.dump(2) << '\n';
            return all_pass ? kExitOk : kExitMismatch;
        }

        if (export_cmd->parsed()) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& f : paper_fixtures()) {
                bool keep = export_patterns.empty();
                for (const auto& p : export_patterns) keep = keep || fixture_matches(f.id, p);
                if (!keep) continue;
                if (list_only)
                    out << f.id << (f.slow ? "  (slow)" : "") << '\n';
                else
                    arr.push_back(to_json(f));
            }
            if (!list_only) out << arr.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return kExitError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}

}  // namespace cyclo

#endif  // CYCLOCODES_CLI_HPP
