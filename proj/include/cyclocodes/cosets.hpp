#ifndef CYCLOCODES_COSETS_HPP
#define CYCLOCODES_COSETS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace cyclo {

using Residue = std::uint32_t;
/// One entry per coordinate, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

inline constexpr unsigned kMaxExtension = 24;

inline Residue double_mod(Residue x, Residue n) noexcept { return x >= n - x ? 2 * x - n : 2 * x; }

/// Orbit of x under doubling mod n, ascending.
inline std::vector<Residue> coset_of(Residue x, Residue n) {
    require(n % 2 == 1, Errc::domain, "cyclotomic cosets need an odd modulus");
    require(x < n, Errc::domain, "residue out of range");
    std::vector<Residue> out;
    Residue y = x;
    do {
        out.push_back(y);
        y = double_mod(y, n);
    } while (y != x);
    std::sort(out.begin(), out.end());
    return out;
}

inline unsigned coset_size(Residue x, Residue n) noexcept {
    unsigned len = 0;
    Residue y = x;
    do {
        ++len;
        y = double_mod(y, n);
    } while (y != x);
    return len;
}

/// Membership bitmap over Z_n.
class ResidueMask {
   public:
    ResidueMask() = default;
    explicit ResidueMask(Residue n) : bits_(n, 0) {}
    ResidueMask(Residue n, std::span<const Residue> elems) : bits_(n, 0) {
        for (auto x : elems) {
            require(x < n, Errc::domain, "residue " + std::to_string(x) + " outside Z_n");
            bits_[x] = 1;
        }
    }

    Residue modulus() const noexcept { return static_cast<Residue>(bits_.size()); }
    bool contains(Residue x) const noexcept { return x < bits_.size() && bits_[x] != 0; }
    void insert(Residue x) { bits_.at(x) = 1; }
    void erase(Residue x) { bits_.at(x) = 0; }

    std::size_t count() const noexcept {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    std::vector<Residue> elements() const {
        std::vector<Residue> out;
        for (Residue x = 0; x < bits_.size(); ++x)
            if (bits_[x]) out.push_back(x);
        return out;
    }

   private:
    std::vector<std::uint8_t> bits_;
};

/// True iff S is closed under x -> 2x mod n.
inline bool is_union_of_cosets(std::span<const Residue> s, Residue n) {
    const ResidueMask mask(n, s);
    return std::all_of(s.begin(), s.end(), [&](Residue x) { return mask.contains(double_mod(x, n)); });
}

/// {(n - x) mod n : x in S}, ascending.
inline std::vector<Residue> negate_set(std::span<const Residue> s, Residue n) {
    std::vector<Residue> out;
    out.reserve(s.size());
    for (auto x : s) out.push_back(x == 0 ? 0 : n - x);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Binary-vector view: pi(x) = (x_0, ..., x_{m-1}) with x = sum x_i 2^i, and
// rho the cyclic shift (x_{m-1}, x_0, ..., x_{m-2}).

inline Bits pi(std::uint64_t x, unsigned m) {
    require(m >= 1 && m <= 32, Errc::domain, "bit length must lie in [1, 32]");
    require(x < (std::uint64_t{1} << m), Errc::domain, "value does not fit in m bits");
    Bits v(m);
    for (unsigned i = 0; i < m; ++i) v[i] = static_cast<std::uint8_t>(x >> i & 1U);
    return v;
}

inline std::uint64_t pi_inv(const Bits& v) {
    require(!v.empty() && v.size() <= 32, Errc::domain, "bit vector length must lie in [1, 32]");
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        require(v[i] <= 1, Errc::domain, "bit vector entries must be 0 or 1");
        x |= std::uint64_t{v[i]} << i;
    }
    return x;
}

inline Bits rho(const Bits& v) {
    require(!v.empty(), Errc::domain, "cannot rotate an empty vector");
    Bits out(v.size());
    out[0] = v.back();
    std::copy(v.begin(), v.end() - 1, out.begin() + 1);
    return out;
}

/// rho^t on the integer form: multiplies x by 2^t modulo 2^m - 1 while keeping
/// the all-ones word fixed at n.
inline std::uint32_t rotate_bits(std::uint32_t x, unsigned m, unsigned t) noexcept {
    t %= m;
    const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
    if (t == 0) return x & mask;
    return ((x << t) | (x >> (m - t))) & mask;
}

// ---------------------------------------------------------------------------

struct CosetInfo {
    Residue leader;
    unsigned size;

    friend bool operator==(const CosetInfo&, const CosetInfo&) = default;
};

/// All 2-cyclotomic cosets modulo n = 2^m - 1. leader_of is dense (n entries).
class CosetTable {
   public:
    static CosetTable build(unsigned m) {
        require(m >= 2 && m <= kMaxExtension, Errc::size, "extension degree must lie in [2, 24]");
        CosetTable t;
        t.m_ = m;
        t.n_ = (Residue{1} << m) - 1;
        constexpr Residue unset = ~Residue{0};
        t.leader_of_.assign(t.n_, unset);
        for (Residue x = 0; x < t.n_; ++x) {
            if (t.leader_of_[x] != unset) continue;
            // x is the smallest unvisited residue, hence the minimum of its orbit.
            unsigned len = 0;
            Residue y = x;
            do {
                t.leader_of_[y] = x;
                ++len;
                y = double_mod(y, t.n_);
            } while (y != x);
            t.cosets_.push_back({x, len});
        }
        return t;
    }

    unsigned m() const noexcept { return m_; }
    Residue n() const noexcept { return n_; }

    Residue leader_of(Residue x) const {
        require(x < n_, Errc::domain, "residue out of range");
        return leader_of_[x];
    }

    bool is_leader(Residue x) const { return leader_of(x) == x; }

    /// Cosets ordered by ascending leader.
    std::span<const CosetInfo> cosets() const noexcept { return cosets_; }

    unsigned size_of(Residue x) const {
        require(x < n_, Errc::domain, "residue out of range");
        return coset_size(x, n_);
    }

    std::vector<Residue> members(Residue x) const { return coset_of(x, n_); }

    /// Union of the cosets of the given residues, ascending.
    std::vector<Residue> union_of(std::span<const Residue> reps) const {
        ResidueMask mask(n_);
        for (auto r : reps) {
            require(r < n_, Errc::domain, "residue out of range");
            Residue y = r;
            do {
                mask.insert(y);
                y = double_mod(y, n_);
            } while (y != r);
        }
        return mask.elements();
    }

    /// Distinct leaders of the cosets meeting S, ascending.
    std::vector<Residue> leaders_in(std::span<const Residue> s) const {
        std::vector<Residue> out;
        out.reserve(s.size());
        for (auto x : s) out.push_back(leader_of(x));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

   private:
    CosetTable() = default;
    unsigned m_ = 0;
    Residue n_ = 0;
    std::vector<Residue> leader_of_;
    std::vector<CosetInfo> cosets_;
};

// ---------------------------------------------------------------------------

inline bool is_prime(unsigned v) noexcept {
    if (v < 2) return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

/// Coset leaders of Z_n, n = 2^(p1 p2) - 1, grouped by coset size.
struct SizeClasses {
    unsigned p1 = 0;
    unsigned p2 = 0;
    std::vector<Residue> p1_leaders;    // cosets of size p1
    std::vector<Residue> p2_leaders;    // cosets of size p2
    std::vector<Residue> full_leaders;  // cosets of size p1 * p2
    /// {0}, plus the size-2 coset leader n/3 when p1 = 2.
    std::vector<Residue> exceptional;
};

inline SizeClasses classify_by_size(const CosetTable& table) {
    const unsigned m = table.m();
    SizeClasses out;
    for (unsigned p = 2; p * p < m; ++p) {
        if (m % p == 0 && is_prime(p) && is_prime(m / p)) {
            out.p1 = p;
            out.p2 = m / p;
        }
    }
    require(out.p1 != 0, Errc::domain, "m = " + std::to_string(m) + " is not a product of two distinct primes");
    for (const auto& c : table.cosets()) {
        if (c.size == 1) {
            out.exceptional.push_back(c.leader);
        } else if (c.size == out.p1) {
            out.p1_leaders.push_back(c.leader);
            if (out.p1 == 2) out.exceptional.push_back(c.leader);
        } else if (c.size == out.p2) {
            out.p2_leaders.push_back(c.leader);
        } else if (c.size == m) {
            out.full_leaders.push_back(c.leader);
        } else {
            fail(Errc::impossible_state, "coset size " + std::to_string(c.size) + " does not divide m");
        }
    }
    const std::uint64_t two_p1 = std::uint64_t{1} << out.p1;
    const std::uint64_t two_p2 = std::uint64_t{1} << out.p2;
    const std::uint64_t two_m = std::uint64_t{1} << m;
    require(out.p1_leaders.size() == (two_p1 - 2) / out.p1 && out.p2_leaders.size() == (two_p2 - 2) / out.p2 &&
                out.full_leaders.size() == (two_m - two_p1 - two_p2 + 2) / m,
            Errc::impossible_state, "coset census disagrees with the size-class formulas");
    return out;
}

/// Nonzero residues split by the parity of their binary weight.
struct WeightClassView {
    unsigned m = 0;
    std::vector<Residue> even;  // wt(x) = 0 mod 2
    std::vector<Residue> odd;   // wt(x) = 1 mod 2

    const std::vector<Residue>& of(unsigned parity) const { return parity % 2 == 0 ? even : odd; }
};

inline WeightClassView weight_classes(unsigned m) {
    require(m >= 2 && m <= kMaxExtension, Errc::size, "extension degree must lie in [2, 24]");
    WeightClassView v;
    v.m = m;
    const Residue n = (Residue{1} << m) - 1;
    for (Residue x = 1; x < n; ++x) (std::popcount(x) % 2 == 0 ? v.even : v.odd).push_back(x);
    return v;
}

}  // namespace cyclo

#endif  // CYCLOCODES_COSETS_HPP
