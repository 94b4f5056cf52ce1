#ifndef CYCLOCODES_GF2_HPP
#define CYCLOCODES_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cyclo {

/// Polynomial over GF(2). Coefficients are packed little-endian into 64-bit words:
/// bit i of the sequence is the coefficient of x^i. The word vector never carries
/// trailing zero words, so the zero polynomial has no words at all.
class BinaryPolynomial {
   public:
    /// Degree sentinel of the zero polynomial.
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BinaryPolynomial() = default;
    explicit BinaryPolynomial(std::vector<std::uint64_t> words) : words_(std::move(words)) { trim(); }

    static BinaryPolynomial one() { return monomial(0); }

    static BinaryPolynomial monomial(std::size_t k) {
        BinaryPolynomial p;
        p.set_coeff(k, true);
        return p;
    }

    static BinaryPolynomial from_exponents(std::initializer_list<std::size_t> exps) {
        BinaryPolynomial p;
        for (auto e : exps) p.set_coeff(e, !p.coeff(e));
        return p;
    }

    /// Parses "1101" as 1 + x + x^3. Trailing zeros are accepted and dropped.
    static BinaryPolynomial from_bits(std::string_view bits) {
        BinaryPolynomial p;
        p.words_.assign((bits.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                p.words_[i / 64] |= std::uint64_t{1} << (i % 64);
            else if (bits[i] != '0')
                fail(Errc::domain, "invalid character in polynomial bit-string");
        }
        p.trim();
        return p;
    }

    /// Hex digits in little-endian nibble order: digit j carries coefficients 4j..4j+3,
    /// least significant bit first. "b" is 1 + x + x^3.
    static BinaryPolynomial from_hex(std::string_view hex) {
        BinaryPolynomial p;
        p.words_.assign((hex.size() * 4 + 63) / 64, 0);
        for (std::size_t j = 0; j < hex.size(); ++j) {
            const char c = hex[j];
            std::uint64_t v = 0;
            if (c >= '0' && c <= '9')
                v = static_cast<std::uint64_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                v = static_cast<std::uint64_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                v = static_cast<std::uint64_t>(c - 'A' + 10);
            else
                fail(Errc::domain, "invalid character in polynomial hex string");
            p.words_[(4 * j) / 64] |= v << ((4 * j) % 64);
        }
        p.trim();
        return p;
    }

    bool is_zero() const noexcept { return words_.empty(); }

    std::size_t degree() const noexcept {
        if (words_.empty()) return npos;
        return 64 * (words_.size() - 1) + 63 - static_cast<std::size_t>(std::countl_zero(words_.back()));
    }

    bool coeff(std::size_t i) const noexcept {
        return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
    }

    void set_coeff(std::size_t i, bool value) {
        if (value) {
            if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
            words_[i / 64] |= std::uint64_t{1} << (i % 64);
        } else if (i / 64 < words_.size()) {
            words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
            trim();
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
        return w;
    }

    std::string to_bits() const {
        if (is_zero()) return "0";
        std::string s(degree() + 1, '0');
        for (std::size_t i = 0; i < s.size(); ++i)
            if (coeff(i)) s[i] = '1';
        return s;
    }

    std::string to_hex() const {
        if (is_zero()) return "0";
        static constexpr char digits[] = "0123456789abcdef";
        const std::size_t nibbles = degree() / 4 + 1;
        std::string s(nibbles, '0');
        for (std::size_t j = 0; j < nibbles; ++j) s[j] = digits[(words_[(4 * j) / 64] >> ((4 * j) % 64)) & 0xF];
        return s;
    }

    /// x^len * p(1/x) for len >= degree: coefficient i moves to len - i.
    BinaryPolynomial reversed(std::size_t len) const {
        require(is_zero() || len >= degree(), Errc::domain, "reversal length below degree");
        BinaryPolynomial r;
        if (is_zero()) return r;
        r.words_.assign(len / 64 + 1, 0);
        for (std::size_t i = 0; i <= degree(); ++i)
            if (coeff(i)) r.words_[(len - i) / 64] |= std::uint64_t{1} << ((len - i) % 64);
        r.trim();
        return r;
    }

    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    BinaryPolynomial& operator+=(const BinaryPolynomial& rhs) {
        if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
        for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
        trim();
        return *this;
    }

    friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs) { return lhs += rhs; }

   private:
    friend BinaryPolynomial poly_mul(const BinaryPolynomial&, const BinaryPolynomial&);
    friend std::pair<BinaryPolynomial, BinaryPolynomial> poly_divrem(const BinaryPolynomial&,
                                                                      const BinaryPolynomial&);

    void trim() noexcept {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

namespace detail {

// dst ^= src * x^shift; dst must be large enough.
inline void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t off = shift / 64;
    const unsigned s = static_cast<unsigned>(shift % 64);
    if (s == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + off] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + off] ^= src[i] << s;
        const std::uint64_t carry = src[i] >> (64 - s);
        if (carry) dst[i + off + 1] ^= carry;
    }
}

}  // namespace detail

/// Carry-less product in GF(2)[x].
inline BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Walk the set bits of the sparser operand.
    const BinaryPolynomial& wide = a.weight() >= b.weight() ? a : b;
    const BinaryPolynomial& sparse = &wide == &a ? b : a;
    std::vector<std::uint64_t> out(a.words_.size() + b.words_.size() + 1, 0);
    for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
        std::uint64_t bits = sparse.words_[w];
        while (bits) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            detail::xor_shifted(out, wide.words_, 64 * w + bit);
        }
    }
    return BinaryPolynomial(std::move(out));
}

inline BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) { return poly_mul(a, b); }

/// Returns (q, r) with a = q*b + r and deg r < deg b.
inline std::pair<BinaryPolynomial, BinaryPolynomial> poly_divrem(const BinaryPolynomial& a,
                                                                  const BinaryPolynomial& b) {
    require(!b.is_zero(), Errc::domain, "division by the zero polynomial");
    BinaryPolynomial q;
    BinaryPolynomial r = a;
    const std::size_t db = b.degree();
    if (r.is_zero() || r.degree() < db) return {q, r};
    q.words_.assign((r.degree() - db) / 64 + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = r.degree() - db;
        q.words_[shift / 64] |= std::uint64_t{1} << (shift % 64);
        detail::xor_shifted(r.words_, b.words_, shift);
        r.trim();
    }
    q.trim();
    return {q, r};
}

/// x^n + 1
inline BinaryPolynomial x_pow_n_plus_one(std::size_t n) {
    auto p = BinaryPolynomial::monomial(n);
    p.set_coeff(0, !p.coeff(0));
    return p;
}

namespace detail {

// Multiply a*b mod f for polynomials packed into machine words, deg f = m <= 31.
inline std::uint64_t mulmod_word(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned m) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m & 1U) a ^= f;
    }
    return r;
}

inline std::uint64_t x_pow_mod(std::uint64_t e, std::uint64_t f, unsigned m) {
    std::uint64_t result = 1;
    std::uint64_t base = 2;  // x
    if (m == 1) base = 2 ^ f;
    while (e) {
        if (e & 1U) result = mulmod_word(result, base, f, m);
        base = mulmod_word(base, base, f, m);
        e >>= 1;
    }
    return result;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            ps.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) ps.push_back(v);
    return ps;
}

}  // namespace detail

/// True iff f (bit i = coefficient of x^i) has degree m and x has multiplicative
/// order exactly 2^m - 1 modulo f, which forces f to be irreducible and primitive.
inline bool is_primitive_modulus(std::uint64_t f, unsigned m) {
    if (m == 0 || m > 31 || (f >> m) != 1 || (f & 1U) == 0) return false;
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    if (detail::x_pow_mod(n, f, m) != 1) return false;
    for (auto q : detail::prime_factors(n))
        if (detail::x_pow_mod(n / q, f, m) == 1) return false;
    return true;
}

/// GF(2^m) represented by a primitive modulus, with log/antilog tables of the
/// primitive element beta = x. Immutable; copies share the tables.
class FieldContext {
   public:
    static constexpr unsigned kMaxDegree = 24;

    /// Builds the field from an explicit modulus (bit i = coefficient of x^i).
    static FieldContext from_modulus(std::uint32_t modulus) {
        const unsigned m = modulus == 0 ? 0 : static_cast<unsigned>(std::bit_width(modulus)) - 1;
        require(m >= 2 && m <= kMaxDegree, Errc::size, "field degree must lie in [2, 24]");
        require(is_primitive_modulus(modulus, m), Errc::domain, "modulus is not a primitive polynomial");
        auto t = std::make_shared<Tables>();
        t->m = m;
        t->n = (std::uint32_t{1} << m) - 1;
        t->modulus = modulus;
        t->antilog.resize(t->n);
        t->log.assign(std::size_t{t->n} + 1, 0);
        std::uint32_t a = 1;
        for (std::uint32_t k = 0; k < t->n; ++k) {
            t->antilog[k] = a;
            t->log[a] = k;
            a <<= 1;
            if (a >> m & 1U) a ^= modulus;
        }
        require(a == 1, Errc::impossible_state, "antilog table did not close after 2^m - 1 steps");
        FieldContext ctx;
        ctx.t_ = std::move(t);
        return ctx;
    }

    unsigned m() const noexcept { return t_->m; }
    /// n = 2^m - 1, the order of beta.
    std::uint32_t order() const noexcept { return t_->n; }
    std::uint32_t modulus_bits() const noexcept { return t_->modulus; }
    BinaryPolynomial modulus() const { return BinaryPolynomial({t_->modulus}); }

    /// beta^k
    std::uint32_t exp(std::uint64_t k) const noexcept { return t_->antilog[k % t_->n]; }

    std::uint32_t log(std::uint32_t e) const {
        require(e != 0 && e <= t_->n, Errc::domain, "log of zero or out-of-field element");
        return t_->log[e];
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = t_->log[a] + t_->log[b];
        if (s >= t_->n) s -= t_->n;
        return t_->antilog[s];
    }

    std::uint32_t inv(std::uint32_t a) const {
        require(a != 0, Errc::domain, "inverse of zero");
        return t_->antilog[(t_->n - t_->log[a]) % t_->n];
    }

    std::span<const std::uint32_t> antilog_table() const noexcept { return t_->antilog; }
    std::span<const std::uint32_t> log_table() const noexcept { return t_->log; }

   private:
    struct Tables {
        unsigned m = 0;
        std::uint32_t n = 0;
        std::uint32_t modulus = 0;
        std::vector<std::uint32_t> antilog;
        std::vector<std::uint32_t> log;
    };

    FieldContext() = default;
    std::shared_ptr<const Tables> t_;
};

/// GF(2^m) using the lexicographically smallest primitive modulus of degree m.
inline FieldContext make_field(unsigned m) {
    require(m >= 2 && m <= FieldContext::kMaxDegree, Errc::size, "field degree must lie in [2, 24]");
    const std::uint32_t lo = (std::uint32_t{1} << m) | 1U;
    const std::uint32_t hi = std::uint32_t{1} << (m + 1);
    for (std::uint32_t f = lo; f < hi; f += 2)
        if (is_primitive_modulus(f, m)) return FieldContext::from_modulus(f);
    fail(Errc::impossible_state, "no primitive polynomial found for degree " + std::to_string(m));
}

/// p(beta^i) in GF(2^m).
inline std::uint32_t evaluate(const FieldContext& ctx, const BinaryPolynomial& p, std::uint64_t i) {
    const std::uint64_t n = ctx.order();
    const std::uint64_t step = i % n;
    std::uint32_t acc = 0;
    auto words = p.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            const std::uint64_t e = 64 * w + static_cast<std::uint64_t>(std::countr_zero(bits));
            bits &= bits - 1;
            acc ^= ctx.exp((e % n) * step % n);
        }
    }
    return acc;
}

/// Minimal polynomial of beta^e: the product of (x - beta^j) over the 2-cyclotomic
/// coset of e, expanded in GF(2^m)[x] and mapped back to GF(2)[x].
inline BinaryPolynomial minimal_polynomial(const FieldContext& ctx, std::uint32_t e) {
    const std::uint32_t n = ctx.order();
    require(e < n, Errc::domain, "exponent must lie in [0, 2^m - 1)");
    std::vector<std::uint32_t> coeffs{1};
    std::uint32_t j = e;
    do {
        const std::uint32_t root = ctx.exp(j);
        coeffs.push_back(0);
        for (std::size_t i = coeffs.size() - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] ^ ctx.mul(root, coeffs[i]);
        coeffs[0] = ctx.mul(root, coeffs[0]);
        j = j >= n - j ? 2 * j - n : 2 * j;
    } while (j != e);
    BinaryPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        require(coeffs[i] <= 1, Errc::impossible_state, "minimal polynomial coefficient outside GF(2)");
        if (coeffs[i]) p.set_coeff(i, true);
    }
    return p;
}

}  // namespace cyclo

#endif  // CYCLOCODES_GF2_HPP
