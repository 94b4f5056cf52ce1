#ifndef CYCLOCODES_CODECORE_HPP
#define CYCLOCODES_CODECORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "cosets.hpp"
#include "error.hpp"
#include "gf2.hpp"

namespace cyclo {

/// Binary cyclic code of length n = 2^m - 1 given by its defining set.
struct CyclicCode {
    Residue n = 0;
    DefiningSet defining_set;
    BinaryPolynomial generator;
    BinaryPolynomial check;
    std::size_t dimension = 0;

    unsigned m() const noexcept { return defining_set.m; }
};

/// Largest n for which assemble confirms the roots of g by field evaluation.
inline constexpr Residue kRootCheckLimit = Residue{1} << 16;

namespace detail {

inline BinaryPolynomial product_of_minimal(const FieldContext& ctx, std::span<const Residue> leaders) {
    BinaryPolynomial acc = BinaryPolynomial::one();
    for (auto l : leaders) acc = poly_mul(acc, minimal_polynomial(ctx, l));
    return acc;
}

}  // namespace detail

/// g = product of minimal polynomials over the leaders in Z; h over the leaders not in Z.
inline CyclicCode assemble(const FieldContext& ctx, const DefiningSet& z) {
    require(ctx.m() == z.m, Errc::domain, "field degree does not match the defining set");
    const Residue n = ctx.order();
    require(z.n == n, Errc::domain, "defining set modulus does not match the field");
    require(is_union_of_cosets(z.elements, n), Errc::domain, "defining set is not doubling-closed");

    const auto table = CosetTable::build(z.m);
    std::vector<Residue> in_z, out_z;
    for (const auto& c : table.cosets()) (z.contains(c.leader) ? in_z : out_z).push_back(c.leader);

    CyclicCode code;
    code.n = n;
    code.defining_set = z;
    code.generator = detail::product_of_minimal(ctx, in_z);
    code.check = detail::product_of_minimal(ctx, out_z);
    code.dimension = n - z.size();
    require(code.generator.degree() == z.size() && code.check.degree() == code.dimension, Errc::impossible_state,
            "generator or check polynomial has the wrong degree");

    if (n <= kRootCheckLimit) {
        // g(beta^(2i)) = g(beta^i)^2, so one evaluation per coset decides the whole coset.
        for (const auto& c : table.cosets()) {
            const bool root = evaluate(ctx, code.generator, c.leader) == 0;
            require(root == z.contains(c.leader), Errc::impossible_state,
                    "generator roots disagree with the defining set at coset " + std::to_string(c.leader));
        }
    }
    return code;
}

inline CyclicCode assemble(const DefiningSet& z) { return assemble(make_field(z.m), z); }

/// -(Z_n \ Z)
inline DefiningSet dual_defining_set(const DefiningSet& z) {
    const Residue n = z.n;
    ResidueMask in(n, z.elements);
    std::vector<Residue> out;
    out.reserve(n - z.size());
    for (Residue x = 0; x < n; ++x)
        if (!in.contains(x)) out.push_back(x == 0 ? 0 : n - x);
    Origin origin = z.origin;
    if (origin.params.erase("dual") == 0) origin.params["dual"] = 1;
    return make_defining_set(z.m, std::move(out), std::move(origin));
}

struct BchBound {
    std::size_t delta = 1;
    /// First residue h of the longest run {h, h+1, ..., h+delta-2} (mod n) inside Z.
    Residue start = 0;
};

/// Longest cyclic run in Z, scanned once over the doubled index range; ties keep the smallest h.
inline BchBound bch_lower_bound(const DefiningSet& z) {
    const Residue n = z.n;
    require(z.size() < n, Errc::degenerate, "defining set is all of Z_n: the code is {0}");
    if (z.elements.empty()) return {};
    ResidueMask in(n, z.elements);
    std::size_t best = 0;
    Residue best_start = 0;
    std::size_t run = 0;
    for (std::uint64_t i = 0; i < 2 * std::uint64_t{n}; ++i) {
        const auto x = static_cast<Residue>(i % n);
        run = in.contains(x) ? run + 1 : 0;
        if (run == 0) continue;
        const auto start = static_cast<Residue>((i + 1 - run) % n);
        if (run > best || (run == best && start < best_start)) {
            best = run;
            best_start = start;
        }
    }
    return {best + 1, best_start};
}

/// Non-systematic encoding c(x) = u(x) g(x).
inline Bits encode(const CyclicCode& code, const Bits& message) {
    require(message.size() == code.dimension, Errc::domain,
            "message length " + std::to_string(message.size()) + " differs from the dimension " +
                std::to_string(code.dimension));
    BinaryPolynomial u;
    for (std::size_t i = 0; i < message.size(); ++i) {
        require(message[i] <= 1, Errc::domain, "message entries must be 0 or 1");
        if (message[i]) u.set_coeff(i, true);
    }
    const auto c = poly_mul(u, code.generator);
    Bits out(code.n, 0);
    for (std::size_t i = 0; i < code.n; ++i) out[i] = c.coeff(i) ? 1 : 0;
    return out;
}

/// g_perp(x) = x^k h(1/x) / h(0); h(0) = 1 because x does not divide x^n + 1.
inline BinaryPolynomial reciprocal_check(const CyclicCode& code) { return code.check.reversed(code.dimension); }

/// Dual code assembled from -(Z_n \ Z), cross-checked against the reciprocal of h.
inline CyclicCode dual(const FieldContext& ctx, const CyclicCode& code) {
    auto d = assemble(ctx, dual_defining_set(code.defining_set));
    require(d.generator == reciprocal_check(code), Errc::impossible_state,
            "dual generator disagrees with the reciprocal check polynomial");
    return d;
}

inline CyclicCode dual(const CyclicCode& code) { return dual(make_field(code.m()), code); }

/// True iff `word` has length n and g divides its polynomial.
inline bool is_codeword(const CyclicCode& code, const Bits& word) {
    if (word.size() != code.n) return false;
    BinaryPolynomial c;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i]) c.set_coeff(i, true);
    return poly_divrem(c, code.generator).second.is_zero();
}

}  // namespace cyclo

#endif  // CYCLOCODES_CODECORE_HPP
