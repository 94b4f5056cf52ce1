#ifndef CYCLOCODES_CONSTRUCTIONS_HPP
#define CYCLOCODES_CONSTRUCTIONS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cosets.hpp"
#include "error.hpp"

namespace cyclo {

/// Where a defining set came from: construction tag, integer parameters and any
/// representative overrides the caller forced.
struct Origin {
    std::string construction;
    std::map<std::string, std::int64_t> params;
    std::vector<Residue> overrides;

    friend bool operator==(const Origin&, const Origin&) = default;
};

/// Doubling-closed subset of Z_n, n = 2^m - 1, stored ascending.
struct DefiningSet {
    unsigned m = 0;
    Residue n = 0;
    std::vector<Residue> elements;
    Origin origin;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(Residue x) const { return std::binary_search(elements.begin(), elements.end(), x); }

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

/// Validates and normalizes (sort, dedupe) a candidate defining set.
inline DefiningSet make_defining_set(unsigned m, std::vector<Residue> elements, Origin origin = {}) {
    require(m >= 2 && m <= kMaxExtension, Errc::size, "extension degree must lie in [2, 24]");
    const Residue n = (Residue{1} << m) - 1;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    require(is_union_of_cosets(elements, n), Errc::domain, "set is not a union of 2-cyclotomic cosets");
    return DefiningSet{m, n, std::move(elements), std::move(origin)};
}

struct AuditCheck {
    std::string identity;
    bool holds = false;

    friend bool operator==(const AuditCheck&, const AuditCheck&) = default;
};

/// Intermediate objects of a construction, kept so the proofs' set relations can be
/// inspected and tested. Identity failures are recorded, not thrown: the emitted set
/// is still a valid defining set, and callers decide what a failure means.
struct ConstructionAudit {
    std::map<std::string, std::vector<Residue>> sets;
    std::map<std::string, std::int64_t> values;
    std::vector<AuditCheck> checks;

    bool all_hold() const {
        return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.holds; });
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.holds) out.push_back(c.identity);
        return out;
    }

    bool holds(const std::string& identity) const {
        for (const auto& c : checks)
            if (c.identity == identity) return c.holds;
        fail(Errc::domain, "audit has no check named " + identity);
    }

    const std::vector<Residue>& set(const std::string& name) const {
        auto it = sets.find(name);
        require(it != sets.end(), Errc::domain, "audit has no set named " + name);
        return it->second;
    }

    std::int64_t value(const std::string& name) const {
        auto it = values.find(name);
        require(it != values.end(), Errc::domain, "audit has no value named " + name);
        return it->second;
    }

    friend bool operator==(const ConstructionAudit&, const ConstructionAudit&) = default;
};

struct Construction {
    DefiningSet set;
    ConstructionAudit audit;
};

struct EvenConstruction {
    DefiningSet z1;
    DefiningSet z2;
    ConstructionAudit audit;
};

namespace detail {

inline std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
    require(b != 0 && a % b == 0, Errc::impossible_state, std::string("expected exact division: ") + what);
    return a / b;
}

inline std::int64_t pow2(unsigned e) { return std::int64_t{1} << e; }

inline void check(ConstructionAudit& audit, bool ok, const std::string& identity) {
    audit.checks.push_back({identity, ok});
}

inline bool disjoint(const ResidueMask& a, std::span<const Residue> b) {
    return std::none_of(b.begin(), b.end(), [&](Residue x) { return a.contains(x); });
}


inline std::vector<Residue> intersect(std::span<const Residue> a, const ResidueMask& b) {
    std::vector<Residue> out;
    for (auto x : a)
        if (b.contains(x)) out.push_back(x);
    return out;
}

inline unsigned floor_log2(std::uint64_t v) { return static_cast<unsigned>(std::bit_width(v)) - 1; }

// sigma0: 1-based position in `full` of the largest full-size leader meeting {1..bound}.
inline std::int64_t covering_index(const CosetTable& table, const std::vector<Residue>& full, std::int64_t bound,
                                   std::vector<Residue>& meeting) {
    ResidueMask is_full(table.n(), full);
    for (Residue x = 1; x <= static_cast<Residue>(bound); ++x) {
        const Residue l = table.leader_of(x);
        if (is_full.contains(l)) meeting.push_back(l);
    }
    std::sort(meeting.begin(), meeting.end());
    meeting.erase(std::unique(meeting.begin(), meeting.end()), meeting.end());
    if (meeting.empty()) return 0;
    auto it = std::lower_bound(full.begin(), full.end(), meeting.back());
    return static_cast<std::int64_t>(it - full.begin()) + 1;
}

// Leaders of the cosets of 2^m - j for 1 < j <= 2^bits - 1.
inline std::vector<Residue> forbidden_tail_leaders(const CosetTable& table, unsigned bits) {
    std::vector<Residue> tail;
    for (std::int64_t j = 2; j <= pow2(bits) - 1; ++j) tail.push_back(static_cast<Residue>(pow2(table.m()) - j));
    return table.leaders_in(tail);
}

// Take full[0..sigma0), then further leaders ascending, skipping `forbidden`, up to `target`.
inline std::vector<Residue> extend_avoiding(const std::vector<Residue>& full, std::int64_t sigma0,
                                            std::int64_t target, const std::vector<Residue>& forbidden) {
    std::vector<Residue> chosen(full.begin(), full.begin() + sigma0);
    for (std::size_t idx = static_cast<std::size_t>(sigma0);
         idx < full.size() && static_cast<std::int64_t>(chosen.size()) < target; ++idx) {
        if (!std::binary_search(forbidden.begin(), forbidden.end(), full[idx])) chosen.push_back(full[idx]);
    }
    require(static_cast<std::int64_t>(chosen.size()) == target, Errc::impossible_state,
            "not enough admissible full-size cosets to extend the selection");
    return chosen;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Even m = 2t: split F_2^m by weight and by the half-word relations x' = x'',
// x' = x'' + 1_t into S1, S2 and read off Z1 = pi^-1(S1) \ {0, n}, Z2 = pi^-1(S2).

inline EvenConstruction build_even_m(const CosetTable& table, bool swap_pairs = false) {
    const unsigned m = table.m();
    require(m % 2 == 0 && m >= 4, Errc::domain, "even-m construction needs even m >= 4");
    const unsigned t = m / 2;
    const Residue n = table.n();
    const Residue half = (Residue{1} << t) - 1;

    std::vector<Residue> s1, s2, b_set, t_set, g_set, residual;
    std::int64_t w_lt = 0, w_eq = 0, w_gt = 0;
    for (Residue x = 0; x <= n; ++x) {
        const auto w = static_cast<unsigned>(std::popcount(x));
        const Residue lo = x & half;
        const Residue hi = x >> t;
        if (w < t) {
            ++w_lt;
            s1.push_back(x);
        } else if (w > t) {
            ++w_gt;
            if (lo == hi) {
                b_set.push_back(x);
                s1.push_back(x);
            } else {
                s2.push_back(x);
            }
        } else {
            ++w_eq;
            if (lo == hi) {
                t_set.push_back(x);
                s1.push_back(x);
            } else if (lo == (hi ^ half)) {
                g_set.push_back(x);
                s2.push_back(x);
            } else {
                residual.push_back(x);
            }
        }
    }

    // Residual weight-t orbits pair up under complementation x -> n - x.
    std::vector<Residue> pair_small, pair_large, p1_leaders, p2_leaders;
    for (Residue x : residual) {
        if (!table.is_leader(x)) continue;
        const Residue partner = table.leader_of(n - x);
        require(partner != x, Errc::impossible_state, "weight-t orbit is self-complementary");
        if (x < partner) {
            pair_small.push_back(x);
            pair_large.push_back(partner);
        }
    }
    p1_leaders = swap_pairs ? pair_small : pair_large;
    p2_leaders = swap_pairs ? pair_large : pair_small;
    const auto p1 = table.union_of(p1_leaders);
    const auto p2 = table.union_of(p2_leaders);
    s1.insert(s1.end(), p1.begin(), p1.end());
    s2.insert(s2.end(), p2.begin(), p2.end());
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());

    ConstructionAudit audit;
    using detail::check;
    check(audit, s1.size() == s2.size(), "|S1| = |S2|");
    {
        ResidueMask both(n + 1, s1);
        check(audit, detail::disjoint(both, s2), "S1 and S2 are disjoint");
        check(audit, s1.size() + s2.size() == std::size_t{n} + 1, "S1 and S2 cover F_2^m");
    }
    check(audit, negate_set(p2, n) == p1, "P1 = P2 + 1_m");
    {
        std::vector<Residue> pu(p1);
        pu.insert(pu.end(), p2.begin(), p2.end());
        std::sort(pu.begin(), pu.end());
        check(audit, pu == residual, "P1 and P2 partition W_t minus (T and G)");
    }
    check(audit, is_union_of_cosets(p1, n) && is_union_of_cosets(p2, n), "P1, P2 are rho-closed");
    {
        // n (the all-ones word) sits in B and is rho-fixed; drop it before the Z_n closure test.
        std::vector<Residue> b_inner;
        for (auto x : b_set)
            if (x != n) b_inner.push_back(x);
        check(audit, is_union_of_cosets(b_inner, n) && is_union_of_cosets(t_set, n) && is_union_of_cosets(g_set, n),
              "B, T, G are rho-closed");
    }

    std::vector<Residue> z1;
    for (auto x : s1)
        if (x != 0 && x != n) z1.push_back(x);
    std::vector<Residue> z2 = s2;
    check(audit, z1.size() == static_cast<std::size_t>(detail::pow2(m - 1) - 2), "|Z1| = 2^(m-1) - 2");
    check(audit, z2.size() == static_cast<std::size_t>(detail::pow2(m - 1)), "|Z2| = 2^(m-1)");

    audit.sets["B"] = b_set;
    audit.sets["T"] = t_set;
    audit.sets["G"] = g_set;
    audit.sets["P1"] = p1;
    audit.sets["P2"] = p2;
    audit.sets["pair_small_leaders"] = pair_small;
    audit.sets["pair_large_leaders"] = pair_large;
    audit.values["t"] = t;
    audit.values["W_lt"] = w_lt;
    audit.values["W_t"] = w_eq;
    audit.values["W_gt"] = w_gt;
    audit.values["swap_pairs"] = swap_pairs ? 1 : 0;

    Origin o1{"even-m", {{"m", m}, {"which", 1}, {"swap_pairs", swap_pairs ? 1 : 0}}, {}};
    Origin o2{"even-m", {{"m", m}, {"which", 2}, {"swap_pairs", swap_pairs ? 1 : 0}}, {}};
    return {make_defining_set(m, std::move(z1), std::move(o1)), make_defining_set(m, std::move(z2), std::move(o2)),
            std::move(audit)};
}

inline EvenConstruction build_even_m(unsigned m, bool swap_pairs = false) {
    require(m % 2 == 0 && m >= 4, Errc::domain, "even-m construction needs even m >= 4");
    require(m <= kMaxExtension, Errc::size, "m must not exceed 24");
    return build_even_m(CosetTable::build(m), swap_pairs);
}

// ---------------------------------------------------------------------------
// m = 2p: cover D0 = {1..M} by the first sigma full-size (2p) cosets plus size-p
// cosets, keep the tail 2^(2p) - j out of the set, and add 0.

inline Construction build_two_prime(unsigned p) {
    require(p % 2 == 1 && is_prime(p) && 2 * p <= kMaxExtension, Errc::domain,
            "two-prime construction needs an odd prime p with 2p <= 24");
    using detail::exact_div;
    using detail::pow2;
    const unsigned m = 2 * p;
    const auto table = CosetTable::build(m);
    const auto classes = classify_by_size(table);
    const auto& i_list = classes.p2_leaders;    // size p
    const auto& j_list = classes.full_leaders;  // size 2p
    const std::int64_t ip = p;

    const std::int64_t base = exact_div(pow2(m) - 4, 2 * ip, "(2^2p - 4) / 2p");
    const std::int64_t extra = exact_div(pow2(p) - 2 * ip - 2, 4 * ip, "(2^p - 2p - 2) / 4p");
    const std::int64_t bound = base + extra - 1;
    const std::int64_t sigma_lo = exact_div(pow2(m) - pow2(p + 1), 4 * ip, "(2^2p - 2^(p+1)) / 4p");
    const std::int64_t sigma_hi = exact_div(pow2(m) - 4, 4 * ip, "(2^2p - 4) / 4p");
    const unsigned tail_bits = detail::floor_log2(m) + 1;

    std::vector<Residue> meeting;
    const std::int64_t sigma0 = detail::covering_index(table, j_list, bound, meeting);
    const auto forbidden = detail::forbidden_tail_leaders(table, tail_bits);

    std::vector<Residue> chosen_full, chosen_small;
    std::int64_t branch = 0;
    if (sigma0 >= sigma_lo) {
        branch = 1;
        require(sigma0 <= sigma_hi, Errc::impossible_state, "sigma0 exceeds (2^2p - 4) / 4p");
        chosen_full.assign(j_list.begin(), j_list.begin() + sigma0);
        const std::int64_t small = base - 2 * sigma0;
        require(small >= 0 && small <= static_cast<std::int64_t>(i_list.size()), Errc::impossible_state,
                "size-p coset count out of range");
        chosen_small.assign(i_list.begin(), i_list.begin() + small);
    } else {
        branch = 2;
        chosen_full = detail::extend_avoiding(j_list, sigma0, sigma_lo, forbidden);
        chosen_small = i_list;
    }

    std::vector<Residue> reps = chosen_full;
    reps.insert(reps.end(), chosen_small.begin(), chosen_small.end());
    reps.push_back(0);
    auto z = table.union_of(reps);

    ConstructionAudit audit;
    using detail::check;
    const ResidueMask zm(table.n(), z);
    check(audit, z.size() == static_cast<std::size_t>(pow2(m - 1) - 1), "|Z| = 2^(2p-1) - 1");
    {
        bool ok = zm.contains(0);
        for (std::int64_t x = 1; x <= bound; ++x) ok = ok && zm.contains(static_cast<Residue>(x));
        check(audit, ok, "D0 and 0 lie in Z");
    }
    std::vector<Residue> tail;
    for (std::int64_t x = pow2(m) - pow2(tail_bits) + 1; x <= pow2(m) - 2; ++x) tail.push_back(static_cast<Residue>(x));
    check(audit, detail::disjoint(zm, tail), "dual tail disjoint from Z");

    audit.sets["F"] = meeting;
    audit.sets["chosen_full"] = chosen_full;
    audit.sets["chosen_small"] = chosen_small;
    audit.sets["forbidden"] = forbidden;
    audit.sets["tail"] = tail;
    audit.values["p"] = p;
    audit.values["M"] = bound;
    audit.values["sigma0"] = sigma0;
    audit.values["sigma_lo"] = sigma_lo;
    audit.values["sigma_hi"] = sigma_hi;
    audit.values["branch"] = branch;
    audit.values["designed_distance"] = base + extra + 1;
    audit.values["designed_dual_distance"] = pow2(tail_bits) - 1;

    Origin o{"two-prime", {{"p", p}}, {}};
    return {make_defining_set(m, std::move(z), std::move(o)), std::move(audit)};
}

// ---------------------------------------------------------------------------
// m = p1 p2 with odd primes p1 < p2: same covering strategy over three size classes.

inline std::int64_t odd_pq_bound(unsigned p1, unsigned p2) {
    using detail::pow2;
    const std::int64_t m = std::int64_t{p1} * p2;
    const std::int64_t a = pow2(p1) - 1;
    const std::int64_t b = pow2(p2) - 1;
    return (pow2(static_cast<unsigned>(m)) - 1) / m + a / (2 * m) + b / (2 * m) + a / (4 * m) + b / (4 * m);
}

inline Construction build_odd_pq(unsigned p1, unsigned p2) {
    require(p1 < p2 && p1 % 2 == 1 && is_prime(p1) && is_prime(p2) && p1 * p2 <= kMaxExtension, Errc::domain,
            "odd-pq construction needs odd primes p1 < p2 with p1 p2 <= 24");
    using detail::exact_div;
    using detail::pow2;
    const unsigned m = p1 * p2;
    const std::int64_t im = m;
    const auto table = CosetTable::build(m);
    const auto classes = classify_by_size(table);
    const auto& i_list = classes.p1_leaders;
    const auto& j_list = classes.p2_leaders;
    const auto& k_list = classes.full_leaders;

    const std::int64_t bound = odd_pq_bound(p1, p2) - 1;
    const std::int64_t small_count = exact_div(pow2(p1) - 2, 2 * std::int64_t{p1}, "(2^p1 - 2) / 2p1");
    const std::int64_t sigma_lo =
        exact_div(pow2(m) - pow2(p1) - pow2(p2 + 1) + 4, 2 * im, "(2^m - 2^p1 - 2^(p2+1) + 4) / 2m");
    const std::int64_t sigma_hi = exact_div(pow2(m) - pow2(p1), 2 * im, "(2^m - 2^p1) / 2m");
    const std::int64_t mid_total = exact_div(pow2(m) - pow2(p1), 2 * std::int64_t{p2}, "(2^m - 2^p1) / 2p2");
    const unsigned tail_bits = detail::floor_log2(m) + 1;

    std::vector<Residue> meeting;
    const std::int64_t sigma0 = detail::covering_index(table, k_list, bound, meeting);
    const auto forbidden = detail::forbidden_tail_leaders(table, tail_bits);

    std::vector<Residue> chosen_small(i_list.begin(), i_list.begin() + small_count);
    std::vector<Residue> chosen_mid, chosen_full;
    std::int64_t branch = 0;
    if (sigma0 >= sigma_lo) {
        branch = 1;
        require(sigma0 <= sigma_hi, Errc::impossible_state, "sigma0 exceeds (2^m - 2^p1) / 2m");
        chosen_full.assign(k_list.begin(), k_list.begin() + sigma0);
        const std::int64_t mid = mid_total - std::int64_t{p1} * sigma0;
        require(mid >= 0 && mid <= static_cast<std::int64_t>(j_list.size()), Errc::impossible_state,
                "size-p2 coset count out of range");
        chosen_mid.assign(j_list.begin(), j_list.begin() + mid);
    } else {
        branch = 2;
        chosen_full = detail::extend_avoiding(k_list, sigma0, sigma_lo, forbidden);
        chosen_mid = j_list;
    }

    std::vector<Residue> reps = chosen_small;
    reps.insert(reps.end(), chosen_mid.begin(), chosen_mid.end());
    reps.insert(reps.end(), chosen_full.begin(), chosen_full.end());
    auto z = table.union_of(reps);

    ConstructionAudit audit;
    using detail::check;
    const ResidueMask zm(table.n(), z);
    check(audit, z.size() == static_cast<std::size_t>(pow2(m - 1) - 1), "|Z| = 2^(m-1) - 1");
    {
        bool ok = true;
        for (std::int64_t x = 1; x <= bound; ++x) ok = ok && zm.contains(static_cast<Residue>(x));
        check(audit, ok, "D0 lies in Z");
    }
    std::vector<Residue> tail{0};
    for (std::int64_t x = pow2(m) - pow2(tail_bits) + 1; x <= pow2(m) - 2; ++x) tail.push_back(static_cast<Residue>(x));
    check(audit, detail::disjoint(zm, tail), "dual tail and 0 disjoint from Z");

    audit.sets["F"] = meeting;
    audit.sets["chosen_small"] = chosen_small;
    audit.sets["chosen_mid"] = chosen_mid;
    audit.sets["chosen_full"] = chosen_full;
    audit.sets["forbidden"] = forbidden;
    audit.sets["tail"] = tail;
    audit.values["p1"] = p1;
    audit.values["p2"] = p2;
    audit.values["M"] = bound;
    audit.values["sigma0"] = sigma0;
    audit.values["sigma_lo"] = sigma_lo;
    audit.values["sigma_hi"] = sigma_hi;
    audit.values["branch"] = branch;
    audit.values["designed_distance"] = bound + 1;
    audit.values["designed_dual_distance"] = pow2(tail_bits);

    Origin o{"odd-pq", {{"p1", p1}, {"p2", p2}}, {}};
    return {make_defining_set(m, std::move(z), std::move(o)), std::move(audit)};
}

// ---------------------------------------------------------------------------
// Odd m: T = cosets of 1..2^((m+1)/2) - 2, which misses -T; every remaining nonzero
// coset C pairs with -C and exactly one of each pair joins T.

inline Construction build_sqrt_complement(unsigned m, const std::vector<Residue>& overrides = {}) {
    require(m % 2 == 1 && m >= 5, Errc::domain, "square-root construction needs odd m >= 5");
    require(m <= kMaxExtension, Errc::size, "m must not exceed 23");
    using detail::pow2;
    const auto table = CosetTable::build(m);
    const Residue n = table.n();
    const auto b = static_cast<Residue>(pow2((m + 1) / 2) - 2);

    std::vector<Residue> seeds;
    for (Residue x = 1; x <= b; ++x) seeds.push_back(x);
    const auto t_set = table.union_of(seeds);
    const auto neg_t = negate_set(t_set, n);
    ResidueMask covered(n, t_set);
    ConstructionAudit audit;
    detail::check(audit, detail::disjoint(covered, neg_t), "T and -T are disjoint");
    for (auto x : neg_t) covered.insert(x);

    std::vector<Residue> pair_small, pair_large;
    for (const auto& c : table.cosets()) {
        if (c.leader == 0 || covered.contains(c.leader)) continue;
        const Residue partner = table.leader_of(n - c.leader);
        require(partner != c.leader, Errc::impossible_state, "coset equals its negation for odd m");
        if (c.leader < partner) {
            pair_small.push_back(c.leader);
            pair_large.push_back(partner);
        }
    }

    std::vector<Residue> selected = pair_small;
    std::vector<Residue> forced;
    std::vector<std::uint8_t> overridden(pair_small.size(), 0);
    for (auto raw : overrides) {
        require(raw < n, Errc::selection, "override " + std::to_string(raw) + " outside Z_n");
        const Residue l = table.leader_of(raw);
        std::size_t idx = pair_small.size();
        for (std::size_t k = 0; k < pair_small.size(); ++k)
            if (pair_small[k] == l || pair_large[k] == l) idx = k;
        require(idx < pair_small.size(), Errc::selection,
                "override " + std::to_string(raw) + " is not in any residual coset pair");
        require(!overridden[idx], Errc::selection,
                "two overrides select from the pair {" + std::to_string(pair_small[idx]) + ", " +
                    std::to_string(pair_large[idx]) + "}");
        overridden[idx] = 1;
        selected[idx] = l;
        forced.push_back(l);
    }
    std::sort(selected.begin(), selected.end());

    std::vector<Residue> reps(t_set);
    reps.insert(reps.end(), selected.begin(), selected.end());
    auto z = table.union_of(reps);
    detail::check(audit, z.size() == static_cast<std::size_t>(pow2(m - 1) - 1), "|Z| = 2^(m-1) - 1");

    audit.sets["T"] = t_set;
    audit.sets["pair_small_leaders"] = pair_small;
    audit.sets["pair_large_leaders"] = pair_large;
    audit.sets["selected_leaders"] = selected;
    audit.values["b"] = b;
    audit.values["designed_distance"] = b + 1;
    audit.values["designed_dual_distance"] = b + 2;

    std::sort(forced.begin(), forced.end());
    Origin o{"sqrt", {{"m", m}}, forced};
    return {make_defining_set(m, std::move(z), std::move(o)), std::move(audit)};
}

// ---------------------------------------------------------------------------
// Odd m >= 9: T = A u B1 where A covers 1..4(2^((m-1)/2) - 4) and B1 is carved out
// of the weight-parity class S_(1 xor i).

struct WeightClassParams {
    Residue t, u, s, v;
};

inline WeightClassParams weight_class_params(unsigned m, unsigned i) {
    using detail::pow2;
    const unsigned h = (m - 1) / 2;
    const bool tu_first = (i == 0 && m % 4 == 3) || (i == 1 && m % 4 == 1);
    const bool sv_first = (i == 0 && m % 4 == 1) || (i == 1 && m % 4 == 3);
    WeightClassParams p{};
    p.t = static_cast<Residue>(tu_first ? pow2(h) - 1 : pow2(h + 1) - 1);
    p.u = static_cast<Residue>(tu_first ? pow2(h + 1) - 3 : 3 * pow2(h) - 1);
    p.s = static_cast<Residue>(sv_first ? pow2(h + 2) - 9 : pow2(h + 2) - 11);
    p.v = static_cast<Residue>(sv_first ? pow2(h + 2) - 15 : pow2(h + 2) - 13);
    return p;
}

inline Construction build_weight_class(unsigned m, unsigned i) {
    require(m % 2 == 1 && m >= 9, Errc::domain, "weight-class construction needs odd m >= 9");
    require(m <= kMaxExtension, Errc::size, "m must not exceed 23");
    require(i <= 1, Errc::domain, "class index i must be 0 or 1");
    using detail::pow2;
    const auto table = CosetTable::build(m);
    const Residue n = table.n();
    const unsigned h = (m - 1) / 2;
    const auto len = static_cast<Residue>(4 * (pow2(h) - 4));

    std::vector<Residue> a_seeds, b_seeds[2];
    for (Residue j = 1; j <= len; ++j) {
        a_seeds.push_back(j);
        b_seeds[std::popcount(j) % 2].push_back(n - j);
    }
    const auto a_set = table.union_of(a_seeds);
    const auto b0_even = table.union_of(b_seeds[0]);
    const auto b0_odd = table.union_of(b_seeds[1]);
    const auto& b0_i = i == 0 ? b0_even : b0_odd;
    const auto prm = weight_class_params(m, i);

    const ResidueMask a_mask(n, a_set);
    ResidueMask b_mask(n, b0_even);
    for (auto x : b0_odd) b_mask.insert(x);

    ConstructionAudit audit;
    using detail::check;
    {
        const std::vector<Residue> reps{static_cast<Residue>(pow2(h) - 1), static_cast<Residue>(pow2(h + 1) - 3),
                                        static_cast<Residue>(pow2(h + 1) - 1), static_cast<Residue>(3 * pow2(h) - 1)};
        check(audit, detail::intersect(b_mask.elements(), a_mask) == table.union_of(reps),
              "A and B meet in the four cosets of 2^((m-1)/2)-1, 2^((m+1)/2)-3, 2^((m+1)/2)-1, 3*2^((m-1)/2)-1");
        bool excluded = true;
        for (Residue j : {9U, 11U, 13U, 15U}) excluded = excluded && !b_mask.contains(static_cast<Residue>(pow2(h + 2)) - j);
        check(audit, excluded, "2^((m+3)/2) - j lies outside B for j in {9, 11, 13, 15}");
        const std::vector<Residue> tu{prm.t, prm.u};
        check(audit, detail::intersect(b0_i, a_mask) == table.union_of(tu), "B0_i meets A in C_t and C_u");
    }

    // B1 = S_(1 xor i) \ [(B0_i \ (C_t u C_u)) u C_s u C_v]
    const std::vector<Residue> tu{prm.t, prm.u};
    const std::vector<Residue> sv{prm.s, prm.v};
    const ResidueMask tu_mask(n, table.union_of(tu));
    ResidueMask removed(n, table.union_of(sv));
    for (auto x : b0_i)
        if (!tu_mask.contains(x)) removed.insert(x);
    const auto classes = weight_classes(m);
    std::vector<Residue> b1;
    for (auto x : classes.of(1 ^ i))
        if (!removed.contains(x)) b1.push_back(x);

    ResidueMask t_mask(n, a_set);
    for (auto x : b1) t_mask.insert(x);
    auto t_set = t_mask.elements();

    check(audit, is_union_of_cosets(t_set, n), "T is a union of cosets");
    check(audit, t_set.size() == static_cast<std::size_t>(pow2(m - 1) - 1), "|T| = 2^(m-1) - 1");
    {
        bool ok = true;
        for (Residue x = 1; x <= len; ++x) ok = ok && t_mask.contains(x);
        check(audit, ok, "{1..4(2^((m-1)/2) - 4)} lies in T");
        const ResidueMask neg(n, negate_set(t_set, n));
        bool clear = true;
        for (Residue x = 0; x + 2 <= static_cast<Residue>(pow2(h)); ++x) clear = clear && !neg.contains(x);
        check(audit, clear, "{0..2^((m-1)/2) - 2} lies outside -T");
    }

    audit.sets["A"] = a_set;
    audit.sets["B0_0"] = b0_even;
    audit.sets["B0_1"] = b0_odd;
    audit.sets["B1"] = b1;
    audit.values["i"] = i;
    audit.values["L"] = len;
    audit.values["t"] = prm.t;
    audit.values["u"] = prm.u;
    audit.values["s"] = prm.s;
    audit.values["v"] = prm.v;
    audit.values["designed_distance"] = std::int64_t{len} + 1;
    audit.values["designed_dual_distance"] = pow2(h);

    Origin o{"weight-class", {{"m", m}, {"i", i}}, {}};
    return {make_defining_set(m, std::move(t_set), std::move(o)), std::move(audit)};
}

}  // namespace cyclo

#endif  // CYCLOCODES_CONSTRUCTIONS_HPP
