#ifndef CYCLOCODES_FIXTURES_HPP
#define CYCLOCODES_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "codecore.hpp"
#include "constructions.hpp"
#include "distance.hpp"
#include "report.hpp"

namespace cyclo {

/// Which builder to run and with what arguments. For even-m, params["which"] picks Z1 or Z2.
struct BuildRequest {
    std::string construction;
    std::map<std::string, std::int64_t> params;
    std::vector<Residue> overrides;
};

namespace detail {

inline std::int64_t param(const BuildRequest& r, const std::string& key) {
    auto it = r.params.find(key);
    require(it != r.params.end(), Errc::domain, r.construction + " needs parameter " + key);
    return it->second;
}

inline unsigned small_param(const BuildRequest& r, const std::string& key) {
    const auto v = param(r, key);
    require(v >= 0 && v <= 64, Errc::domain, "parameter " + key + " out of range");
    return static_cast<unsigned>(v);
}

}  // namespace detail

inline Construction build(const BuildRequest& r) {
    using detail::small_param;
    const auto& c = r.construction;
    if (c == "even-m") {
        const unsigned which = small_param(r, "which");
        require(which == 1 || which == 2, Errc::domain, "even-m selects Z1 or Z2 (which = 1 or 2)");
        const bool swap = r.params.count("swap_pairs") && r.params.at("swap_pairs") != 0;
        auto e = build_even_m(small_param(r, "m"), swap);
        return {which == 1 ? std::move(e.z1) : std::move(e.z2), std::move(e.audit)};
    }
    if (c == "two-prime") return build_two_prime(small_param(r, "p"));
    if (c == "odd-pq") return build_odd_pq(small_param(r, "p1"), small_param(r, "p2"));
    if (c == "sqrt") return build_sqrt_complement(small_param(r, "m"), r.overrides);
    if (c == "weight-class") return build_weight_class(small_param(r, "m"), small_param(r, "i"));
    fail(Errc::domain, "unknown construction " + c);
}

struct Fixture {
    std::string id;
    BuildRequest request;
    std::string source;
    std::string note;
    std::optional<std::vector<Residue>> expected_set;
    std::map<std::string, std::vector<Residue>> expected_audit_sets;
    Residue n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d_exact;
    std::optional<std::size_t> dual_d_exact;
    /// Weights the low-weight search must reach (upper bounds equal to the claimed d).
    std::optional<std::size_t> d_search;
    std::optional<std::size_t> dual_d_search;
    std::size_t d_floor = 0;
    std::size_t dual_floor = 0;
    /// Run the exhaustive engine and require d >= d_floor.
    bool exhaustive_floor = false;
    bool slow = false;
};

inline const std::vector<Fixture>& paper_fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> v;
        auto add = [&](Fixture f) { v.push_back(std::move(f)); };

        Fixture f;
        f.id = "example1-z1";
        f.request = {"even-m", {{"m", 4}, {"which", 1}}, {}};
        f.source = "Example 1, m = 4";
        f.expected_set = std::vector<Residue>{1, 2, 4, 5, 8, 10};
        f.n = 15, f.k = 9, f.d_exact = 3, f.dual_d_exact = 6, f.d_floor = 3, f.dual_floor = 4;
        add(f);

        f = {};
        f.id = "example1-z2";
        f.request = {"even-m", {{"m", 4}, {"which", 2}}, {}};
        f.source = "Example 1, m = 4";
        f.note = "printed Z2 omits 7; 7 lies in W_>t \\ B and its coset {7,11,13,14} is otherwise present";
        f.expected_set = std::vector<Residue>{3, 6, 7, 9, 11, 12, 13, 14};
        f.n = 15, f.k = 7, f.d_exact = 5, f.dual_d_exact = 4, f.d_floor = 4, f.dual_floor = 4;
        add(f);

        f = {};
        f.id = "example2-z1";
        f.request = {"even-m", {{"m", 6}, {"which", 1}}, {}};
        f.source = "Example 2, m = 6";
        f.expected_set = std::vector<Residue>{1,  2,  3,  4,  5,  6,  8,  9,  10, 12, 13, 16, 17, 18, 19,
                                              20, 24, 26, 27, 32, 33, 34, 36, 38, 40, 41, 45, 48, 52, 54};
        f.expected_audit_sets = {{"P1", {13, 19, 26, 38, 41, 52}}, {"P2", {11, 22, 25, 37, 44, 50}}};
        f.n = 63, f.k = 33, f.d_exact = 7, f.dual_d_exact = 12, f.d_floor = 7, f.dual_floor = 8;
        f.slow = true;
        add(f);

        f = {};
        f.id = "example2-z2";
        f.request = {"even-m", {{"m", 6}, {"which", 2}}, {}};
        f.source = "Example 2, m = 6";
        f.note = "printed Z2 has 31 entries and omits 7; the coset {7,14,28,56,49,35} lies in G";
        f.expected_set = std::vector<Residue>{7,  11, 14, 15, 21, 22, 23, 25, 28, 29, 30, 31, 35, 37, 39, 42,
                                              43, 44, 46, 47, 49, 50, 51, 53, 55, 56, 57, 58, 59, 60, 61, 62};
        f.n = 63, f.k = 31, f.d_exact = 9, f.dual_d_exact = 8, f.d_floor = 8, f.dual_floor = 8;
        f.slow = true;
        add(f);

        f = {};
        f.id = "table3-p3";
        f.request = {"two-prime", {{"p", 3}}, {}};
        f.source = "Table III, p = 3";
        f.note = "table floor 10; the construction's run {0..10} gives BCH bound 12";
        f.n = 63, f.k = 32, f.d_floor = 10, f.dual_floor = 7, f.exhaustive_floor = true;
        add(f);

        f = {};
        f.id = "table3-p5";
        f.request = {"two-prime", {{"p", 5}}, {}};
        f.source = "Table III, p = 5";
        f.note = "table floor 103; D0 = {1..102} plus 0 gives 104 by formula";
        f.n = 1023, f.k = 512, f.d_floor = 103, f.dual_floor = 15;
        add(f);

        f = {};
        f.id = "table4-3-5";
        f.request = {"odd-pq", {{"p1", 3}, {"p2", 5}}, {}};
        f.source = "Table IV, (p1, p2) = (3, 5)";
        f.n = 32767, f.k = 16384, f.d_floor = 2185, f.dual_floor = 16;
        add(f);

        f = {};
        f.id = "table4-3-7";
        f.request = {"odd-pq", {{"p1", 3}, {"p2", 7}}, {}};
        f.source = "Table IV, (p1, p2) = (3, 7)";
        f.n = 2097151, f.k = 1048576, f.d_floor = 99868, f.dual_floor = 32;
        add(f);

        f = {};
        f.id = "sqrt-m5";
        f.request = {"sqrt", {{"m", 5}}, {}};
        f.source = "Section V.A example, m = 5";
        f.expected_set = std::vector<Residue>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17, 18, 20, 24};
        f.n = 31, f.k = 16, f.d_exact = 7, f.dual_d_exact = 8, f.d_floor = 7, f.dual_floor = 8;
        add(f);

        f = {};
        f.id = "sqrt-m7";
        f.request = {"sqrt", {{"m", 7}}, {21, 27}};
        f.source = "Section V.A example, m = 7";
        f.note = "representatives {21, 27} are an explicit override; the default rule picks {19, 21}";
        f.expected_set = std::vector<Residue>{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 16, 17,
                                              18, 20, 21, 22, 24, 26, 27, 28, 32, 33, 34, 35, 36, 37, 40, 41,
                                              42, 44, 48, 49, 51, 52, 54, 56, 64, 65, 66, 67, 68, 69, 70, 72,
                                              74, 77, 80, 81, 82, 84, 88, 89, 96, 97, 98, 102, 104, 108, 112};
        f.n = 127, f.k = 64, f.d_search = 19, f.dual_d_search = 20, f.d_floor = 15, f.dual_floor = 16;
        f.slow = true;
        add(f);

        for (unsigned m : {9U, 11U, 13U}) {
            for (unsigned i : {0U, 1U}) {
                f = {};
                f.id = "weight-class-m" + std::to_string(m) + "-i" + std::to_string(i);
                f.request = {"weight-class", {{"m", m}, {"i", i}}, {}};
                f.source = "Section V.B, m = " + std::to_string(m);
                f.n = (Residue{1} << m) - 1;
                f.k = std::size_t{1} << (m - 1);
                f.d_floor = 4 * ((std::size_t{1} << ((m - 1) / 2)) - 4) + 1;
                f.dual_floor = std::size_t{1} << ((m - 1) / 2);
                if (m == 9 && i == 0)
                    f.note = "v = 2^((m+3)/2) - 15 = 49 is not a coset leader at m = 9 (C_49 = C_35 lies in A)";
                add(f);
            }
        }
        return v;
    }();
    return all;
}

/// Simple glob (`*`, `?`); a bare pattern also matches ids it prefixes up to a '-'.
inline bool fixture_matches(const std::string& id, const std::string& pattern) {
    auto glob = [](const std::string& s, const std::string& p) {
        std::size_t si = 0, pi = 0, star = std::string::npos, mark = 0;
        while (si < s.size()) {
            if (pi < p.size() && (p[pi] == '?' || p[pi] == s[si])) {
                ++si, ++pi;
            } else if (pi < p.size() && p[pi] == '*') {
                star = pi++;
                mark = si;
            } else if (star != std::string::npos) {
                pi = star + 1;
                si = ++mark;
            } else {
                return false;
            }
        }
        while (pi < p.size() && p[pi] == '*') ++pi;
        return pi == p.size();
    };
    if (glob(id, pattern)) return true;
    return id.size() > pattern.size() && id.compare(0, pattern.size(), pattern) == 0 && id[pattern.size()] == '-';
}

struct FixtureOutcome {
    std::string id;
    bool passed = true;
    std::string summary;
    std::vector<std::string> mismatches;
};

namespace detail {

inline std::string set_diff(const std::vector<Residue>& got, const std::vector<Residue>& want) {
    std::vector<Residue> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    std::ostringstream os;
    auto list = [&](const char* label, const std::vector<Residue>& xs) {
        os << label << " {";
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
        os << "}";
    };
    list("missing", missing);
    os << ' ';
    list("extra", extra);
    return os.str();
}

inline std::string describe_distance(const std::optional<DistanceResult>& r, std::size_t bch) {
    if (!r) return ">=" + std::to_string(bch);
    if (r->exact_distance) return std::to_string(*r->exact_distance);
    return "<=" + std::to_string(r->best_weight_found);
}

}  // namespace detail

struct VerifyOptions {
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::uint64_t iterations = 10000;
    unsigned depth = 2;
};

inline FixtureOutcome verify_fixture(const Fixture& f, const VerifyOptions& opt = {}) {
    FixtureOutcome out;
    out.id = f.id;
    auto mismatch = [&](const std::string& what) {
        out.passed = false;
        out.mismatches.push_back(what);
    };
    auto expect_eq = [&](const std::string& what, std::size_t got, std::size_t want) {
        if (got != want) mismatch(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
    };

    const auto built = build(f.request);
    const auto& z = built.set;
    for (const auto& failed : built.audit.failures()) mismatch("audit identity failed: " + failed);
    if (f.expected_set && z.elements != *f.expected_set)
        mismatch("defining set differs: " + detail::set_diff(z.elements, *f.expected_set));
    for (const auto& [name, want] : f.expected_audit_sets) {
        const auto& got = built.audit.set(name);
        if (got != want) mismatch("audit set " + name + " differs: " + detail::set_diff(got, want));
    }
    expect_eq("n", z.n, f.n);
    expect_eq("dimension", z.n - z.size(), f.k);

    const auto dz = dual_defining_set(z);
    const auto bch = bch_lower_bound(z).delta;
    const auto dual_bch = bch_lower_bound(dz).delta;
    if (bch < f.d_floor)
        mismatch("BCH bound " + std::to_string(bch) + " below floor " + std::to_string(f.d_floor));
    if (dual_bch < f.dual_floor)
        mismatch("dual BCH bound " + std::to_string(dual_bch) + " below floor " + std::to_string(f.dual_floor));

    std::optional<DistanceResult> d, dd;
    const auto ctx = make_field(z.m);
    const auto code = assemble(ctx, z);
    const auto dcode = dual(ctx, code);
    expect_eq("dimension + dual dimension", code.dimension + dcode.dimension, code.n);

    if (f.d_exact || f.exhaustive_floor) d = exact_min_distance(code, kDefaultBudget, opt.threads);
    if (f.d_exact) expect_eq("minimum distance", *d->exact_distance, *f.d_exact);
    if (f.exhaustive_floor && *d->exact_distance < f.d_floor)
        mismatch("minimum distance " + std::to_string(*d->exact_distance) + " below floor " +
                 std::to_string(f.d_floor));
    if (d && *d->exact_distance < bch) mismatch("exact distance below the BCH bound");
    if (f.dual_d_exact) {
        dd = exact_min_distance(dcode, kDefaultBudget, opt.threads);
        expect_eq("dual minimum distance", *dd->exact_distance, *f.dual_d_exact);
        if (*dd->exact_distance < dual_bch) mismatch("exact dual distance below the BCH bound");
    }
    if (f.d_search) {
        d = low_weight_search(code, opt.seed, opt.iterations, opt.depth, opt.threads);
        expect_eq("searched weight", d->best_weight_found, *f.d_search);
    }
    if (f.dual_d_search) {
        dd = low_weight_search(dcode, opt.seed, opt.iterations, opt.depth, opt.threads);
        expect_eq("searched dual weight", dd->best_weight_found, *f.dual_d_search);
    }

    std::ostringstream os;
    os << '[' << z.n << ',' << z.n - z.size() << ',' << detail::describe_distance(d, bch) << "] dual [" << dz.n << ','
       << dz.n - dz.size() << ',' << detail::describe_distance(dd, dual_bch) << "] bch " << bch << '/' << dual_bch;
    out.summary = os.str();
    return out;
}

inline nlohmann::json to_json(const Fixture& f) {
    nlohmann::json j = {{"id", f.id},
                        {"construction", f.request.construction},
                        {"params", f.request.params},
                        {"overrides", f.request.overrides},
                        {"source", f.source},
                        {"n", f.n},
                        {"k", f.k},
                        {"d_floor", f.d_floor},
                        {"dual_floor", f.dual_floor},
                        {"slow", f.slow}};
    if (!f.note.empty()) j["note"] = f.note;
    if (f.expected_set) j["expected_set"] = *f.expected_set;
    if (!f.expected_audit_sets.empty()) j["expected_audit_sets"] = f.expected_audit_sets;
    if (f.d_exact) j["d_exact"] = *f.d_exact;
    if (f.dual_d_exact) j["dual_d_exact"] = *f.dual_d_exact;
    if (f.d_search) j["d_search"] = *f.d_search;
    if (f.dual_d_search) j["dual_d_search"] = *f.dual_d_search;
    return j;
}

}  // namespace cyclo

#endif  // CYCLOCODES_FIXTURES_HPP
