#ifndef CYCLOCODES_DISTANCE_HPP
#define CYCLOCODES_DISTANCE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "codecore.hpp"
#include "error.hpp"

namespace cyclo {

enum class DistanceMethod { exhaustive, search };

inline const char* method_name(DistanceMethod m) noexcept {
    return m == DistanceMethod::exhaustive ? "exhaustive" : "search";
}

struct DistanceResult {
    DistanceMethod method = DistanceMethod::exhaustive;
    std::optional<std::size_t> exact_distance;
    std::size_t best_weight_found = 0;
    std::size_t proven_lower_bound = 0;
    Bits witness;
    /// Codewords visited (exhaustive) or information sets tried (search).
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    unsigned depth = 0;

    friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

inline constexpr unsigned kDefaultBudget = 33;

namespace detail {

using Word = std::uint64_t;

inline std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

/// Rows x^i g(x), i < k, bit-packed with `words` 64-bit words each.
inline std::vector<Word> shifted_rows(const CyclicCode& code, std::size_t words) {
    const std::size_t k = code.dimension;
    std::vector<Word> rows(k * words, 0);
    const auto g = code.generator.words();
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Word> tmp(words, 0);
        xor_shifted(tmp, g, i);
        std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(words), rows.begin() + i * words);
    }
    return rows;
}

/// a < b in the order where the first differing coordinate decides and 0 < 1.
inline bool lex_less(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        const Word diff = a[w] ^ b[w];
        if (diff) return (a[w] & (diff & -diff)) == 0;
    }
    return false;
}

inline std::size_t weight_of(const Word* a, std::size_t words) {
    std::size_t s = 0;
    for (std::size_t w = 0; w < words; ++w) s += static_cast<std::size_t>(std::popcount(a[w]));
    return s;
}

inline Bits unpack(const std::vector<Word>& v, std::size_t n) {
    Bits out(n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(v[i / 64] >> (i % 64) & 1U);
    return out;
}

struct Best {
    std::size_t weight = SIZE_MAX;
    std::vector<Word> word;

    void offer(const Word* cand, std::size_t wt, std::size_t words) {
        if (wt < weight || (wt == weight && lex_less(cand, word.data(), words))) {
            weight = wt;
            word.assign(cand, cand + words);
        }
    }
};

// Gray-code walk over messages s in [lo, hi): codeword of gray(s) = gray(s-1) xor row[ctz(s)].
inline Best gray_segment_1(const std::vector<Word>& rows, std::uint64_t lo, std::uint64_t hi) {
    Best best;
    Word cw = 0;
    const std::uint64_t g0 = (lo - 1) ^ ((lo - 1) >> 1);
    for (std::uint64_t bits = g0; bits; bits &= bits - 1) cw ^= rows[static_cast<std::size_t>(std::countr_zero(bits))];
    std::size_t bw = SIZE_MAX;
    Word bword = 0;
    for (std::uint64_t s = lo; s < hi; ++s) {
        cw ^= rows[static_cast<std::size_t>(std::countr_zero(s))];
        const auto wt = static_cast<std::size_t>(std::popcount(cw));
        if (wt <= bw) {
            if (wt < bw || lex_less(&cw, &bword, 1)) {
                bw = wt;
                bword = cw;
            }
        }
    }
    if (bw != SIZE_MAX) {
        best.weight = bw;
        best.word = {bword};
    }
    return best;
}

inline Best gray_segment_n(const std::vector<Word>& rows, std::size_t words, std::uint64_t lo, std::uint64_t hi) {
    Best best;
    std::vector<Word> cw(words, 0);
    const std::uint64_t g0 = (lo - 1) ^ ((lo - 1) >> 1);
    for (std::uint64_t bits = g0; bits; bits &= bits - 1) {
        const Word* r = &rows[static_cast<std::size_t>(std::countr_zero(bits)) * words];
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= r[w];
    }
    for (std::uint64_t s = lo; s < hi; ++s) {
        const Word* r = &rows[static_cast<std::size_t>(std::countr_zero(s)) * words];
        std::size_t wt = 0;
        for (std::size_t w = 0; w < words; ++w) {
            cw[w] ^= r[w];
            wt += static_cast<std::size_t>(std::popcount(cw[w]));
        }
        if (wt <= best.weight) best.offer(cw.data(), wt, words);
    }
    return best;
}

inline unsigned resolve_threads(unsigned hint) {
    if (hint != 0) return hint;
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Exact minimum distance by enumerating all 2^k - 1 nonzero messages in Gray-code order.
/// The witness is the lexicographically smallest minimum-weight codeword, so the result
/// does not depend on `threads`.
inline DistanceResult exact_min_distance(const CyclicCode& code, unsigned budget = kDefaultBudget,
                                         unsigned threads = 1) {
    const std::size_t k = code.dimension;
    require(k >= 1, Errc::degenerate, "the zero code has no minimum distance");
    require(k <= budget && k <= 62, Errc::budget,
            "dimension " + std::to_string(k) + " exceeds the exhaustive budget " + std::to_string(budget) +
                "; use the low-weight search engine");
    const std::size_t words = detail::word_count(code.n);
    const auto rows = detail::shifted_rows(code, words);
    const std::uint64_t total = std::uint64_t{1} << k;

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(detail::resolve_threads(threads), total - 1));
    std::vector<detail::Best> partial(workers);
    auto run = [&](unsigned idx) {
        const std::uint64_t span = total - 1;
        const std::uint64_t lo = 1 + span * idx / workers;
        const std::uint64_t hi = 1 + span * (idx + 1) / workers;
        if (lo >= hi) return;
        partial[idx] = words == 1 ? detail::gray_segment_1(rows, lo, hi) : detail::gray_segment_n(rows, words, lo, hi);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run, i);
    }

    detail::Best best;
    for (const auto& p : partial)
        if (p.weight != SIZE_MAX) best.offer(p.word.data(), p.weight, words);

    DistanceResult r;
    r.method = DistanceMethod::exhaustive;
    r.exact_distance = best.weight;
    r.best_weight_found = best.weight;
    r.proven_lower_bound = best.weight;
    r.witness = detail::unpack(best.word, code.n);
    r.iterations = total - 1;
    return r;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform draw in [0, bound] by masked rejection; independent of the standard library's
/// distribution implementations.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound);
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v <= bound) return v;
    }
}

inline std::vector<std::uint32_t> seeded_permutation(std::size_t n, std::uint64_t seed, std::uint64_t iteration) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(iteration)));
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i - 1)]);
    return perm;
}

/// Row-reduces a copy of `rows` (k x words) to systematic form on the first k independent
/// columns met in `perm` order. Returns false only if fewer than k pivots exist.
inline bool systematize(std::vector<Word>& m, std::size_t k, std::size_t words, const std::vector<std::uint32_t>& perm) {
    std::size_t r = 0;
    for (std::size_t idx = 0; idx < perm.size() && r < k; ++idx) {
        const std::size_t col = perm[idx];
        const std::size_t cw = col / 64;
        const Word bit = Word{1} << (col % 64);
        std::size_t piv = r;
        while (piv < k && !(m[piv * words + cw] & bit)) ++piv;
        if (piv == k) continue;
        if (piv != r)
            std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv * words),
                             m.begin() + static_cast<std::ptrdiff_t>((piv + 1) * words),
                             m.begin() + static_cast<std::ptrdiff_t>(r * words));
        const Word* pr = &m[r * words];
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || !(m[i * words + cw] & bit)) continue;
            Word* row = &m[i * words];
            for (std::size_t w = 0; w < words; ++w) row[w] ^= pr[w];
        }
        ++r;
    }
    return r == k;
}

// All sums of 1..depth distinct systematic rows.
inline void enumerate_patterns(const std::vector<Word>& m, std::size_t k, std::size_t words, unsigned depth,
                               Best& best) {
    std::vector<Word> acc(words);
    std::vector<std::size_t> idx;
    auto visit = [&](auto&& self, std::size_t from) -> void {
        if (!idx.empty()) best.offer(acc.data(), weight_of(acc.data(), words), words);
        if (idx.size() == depth) return;
        for (std::size_t i = from; i < k; ++i) {
            const Word* row = &m[i * words];
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
        }
    };
    visit(visit, 0);
}

}  // namespace detail

inline constexpr unsigned kMaxSearchDepth = 3;

/// Lee-Brickell information-set search. Iteration i draws its column permutation from
/// (seed, i) alone, so the result is deterministic for fixed (seed, iterations, depth),
/// independent of `threads`, and never worsens as `iterations` grows.
inline DistanceResult low_weight_search(const CyclicCode& code, std::uint64_t seed, std::uint64_t iterations,
                                        unsigned depth, unsigned threads = 1) {
    const std::size_t k = code.dimension;
    require(k >= 1, Errc::degenerate, "the zero code has no minimum distance");
    require(depth >= 1 && depth <= kMaxSearchDepth, Errc::domain, "search depth must lie in [1, 3]");
    require(iterations >= 1, Errc::domain, "search needs at least one iteration");
    const std::size_t words = detail::word_count(code.n);
    const auto rows = detail::shifted_rows(code, words);

    const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(detail::resolve_threads(threads), iterations));
    std::vector<detail::Best> partial(workers);
    std::vector<std::uint8_t> failed(workers, 0);
    auto run = [&](unsigned idx) {
        std::vector<detail::Word> m;
        for (std::uint64_t it = idx; it < iterations; it += workers) {
            m = rows;
            const auto perm = detail::seeded_permutation(code.n, seed, it);
            if (!detail::systematize(m, k, words, perm)) {
                failed[idx] = 1;
                return;
            }
            detail::enumerate_patterns(m, k, words, depth, partial[idx]);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run, i);
    }
    require(std::none_of(failed.begin(), failed.end(), [](auto f) { return f != 0; }), Errc::search,
            "generator rows lost rank during reduction");

    detail::Best best;
    for (const auto& p : partial)
        if (p.weight != SIZE_MAX) best.offer(p.word.data(), p.weight, words);

    DistanceResult r;
    r.method = DistanceMethod::search;
    r.best_weight_found = best.weight;
    r.proven_lower_bound = bch_lower_bound(code.defining_set).delta;
    r.witness = detail::unpack(best.word, code.n);
    r.iterations = iterations;
    r.seed = seed;
    r.depth = depth;
    require(is_codeword(code, r.witness), Errc::impossible_state, "search witness is not a codeword");
    require(r.proven_lower_bound <= r.best_weight_found, Errc::impossible_state,
            "search found a word below the BCH bound");
    return r;
}

struct DistancePolicy {
    enum class Engine { automatic, exhaustive, search };
    Engine engine = Engine::automatic;
    unsigned budget = kDefaultBudget;
    std::uint64_t seed = 1;
    std::uint64_t iterations = 10000;
    unsigned depth = 2;
    unsigned threads = 0;
};

inline DistanceResult auto_distance(const CyclicCode& code, const DistancePolicy& policy = {}) {
    using Engine = DistancePolicy::Engine;
    const bool exhaustive = policy.engine == Engine::exhaustive ||
                            (policy.engine == Engine::automatic && code.dimension <= policy.budget);
    if (exhaustive) return exact_min_distance(code, policy.budget, policy.threads);
    return low_weight_search(code, policy.seed, policy.iterations, policy.depth, policy.threads);
}

}  // namespace cyclo

#endif  // CYCLOCODES_DISTANCE_HPP
