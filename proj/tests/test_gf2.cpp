#include <gtest/gtest.h>

#include <random>

#include "cyclocodes/cosets.hpp"
#include "cyclocodes/gf2.hpp"

using namespace cyclo;

namespace {

BinaryPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    BinaryPolynomial p;
    const std::size_t deg = rng() % (max_degree + 1);
    for (std::size_t i = 0; i <= deg; ++i)
        if (rng() & 1U) p.set_coeff(i, true);
    return p;
}

// Order of x in GF(2)[x]/f by walking powers; 0 when x never returns to 1.
std::uint64_t order_of_x(std::uint32_t f, unsigned m) {
    std::uint32_t a = 1;
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << m); ++k) {
        a <<= 1;
        if (a >> m & 1U) a ^= f;
        if (a == 1) return k;
    }
    return 0;
}

std::uint32_t smallest_primitive_by_walk(unsigned m) {
    for (std::uint32_t f = 1U << m; f < (1U << (m + 1)); ++f)
        if (order_of_x(f, m) == (1U << m) - 1) return f;
    return 0;
}

// Schoolbook product then reduction, one bit at a time.
std::uint32_t slow_field_mul(std::uint32_t a, std::uint32_t b, std::uint32_t f, unsigned m) {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < m; ++i)
        if (b >> i & 1U) prod ^= std::uint64_t{a} << i;
    for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i)
        if (prod >> i & 1U) prod ^= std::uint64_t{f} << (i - static_cast<int>(m));
    return static_cast<std::uint32_t>(prod);
}

}  // namespace

TEST(BinaryPolynomial, ZeroHasSentinelDegree) {
    BinaryPolynomial z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), BinaryPolynomial::npos);
    EXPECT_EQ(z.to_bits(), "0");
    EXPECT_TRUE(z.words().empty());
}

TEST(BinaryPolynomial, BitStringsAreLittleEndian) {
    const auto p = BinaryPolynomial::from_bits("1101");
    EXPECT_EQ(p, BinaryPolynomial::from_exponents({0, 1, 3}));
    EXPECT_EQ(p.degree(), 3U);
    EXPECT_EQ(p.to_bits(), "1101");
    EXPECT_EQ(BinaryPolynomial::from_bits("110100"), p);
    EXPECT_THROW(BinaryPolynomial::from_bits("12"), Error);
}

TEST(BinaryPolynomial, HexUsesLittleEndianNibbles) {
    EXPECT_EQ(BinaryPolynomial::from_hex("b"), BinaryPolynomial::from_bits("1101"));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_poly(rng, 300);
        EXPECT_EQ(BinaryPolynomial::from_hex(p.to_hex()), p);
        EXPECT_EQ(BinaryPolynomial::from_bits(p.to_bits()), p);
    }
}

TEST(BinaryPolynomial, TrimKeepsCanonicalForm) {
    auto p = BinaryPolynomial::monomial(130);
    p.set_coeff(130, false);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.words().empty());
    EXPECT_EQ(BinaryPolynomial(std::vector<std::uint64_t>{5, 0, 0}).words().size(), 1U);
}

TEST(PolyMul, SmallProducts) {
    const auto one_plus_x = BinaryPolynomial::from_bits("11");
    EXPECT_EQ(one_plus_x * one_plus_x, BinaryPolynomial::from_bits("101"));
    EXPECT_TRUE((one_plus_x * BinaryPolynomial{}).is_zero());
    EXPECT_EQ(one_plus_x * BinaryPolynomial::from_bits("111"), BinaryPolynomial::from_bits("1001"));
}

TEST(PolyMul, RandomizedAlgebra) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_poly(rng, 200);
        const auto b = random_poly(rng, 150);
        const auto c = random_poly(rng, 90);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
        }
    }
}

TEST(PolyDivrem, Examples) {
    auto [q, r] = poly_divrem(x_pow_n_plus_one(3), BinaryPolynomial::from_bits("11"));
    EXPECT_EQ(q, BinaryPolynomial::from_bits("111"));
    EXPECT_TRUE(r.is_zero());
    const auto a = BinaryPolynomial::from_bits("1011011");
    auto [q2, r2] = poly_divrem(a, a);
    EXPECT_EQ(q2, BinaryPolynomial::one());
    EXPECT_TRUE(r2.is_zero());
    EXPECT_THROW(poly_divrem(a, BinaryPolynomial{}), Error);
}

TEST(PolyDivrem, RoundTrip) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const auto a = random_poly(rng, 400);
        auto b = random_poly(rng, 120);
        if (b.is_zero()) b = BinaryPolynomial::one();
        auto [q, r] = poly_divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
    }
}

TEST(PolyReverse, Reversal) {
    EXPECT_EQ(BinaryPolynomial::from_bits("1101").reversed(3), BinaryPolynomial::from_bits("1011"));
    EXPECT_EQ(BinaryPolynomial::from_bits("11").reversed(4), BinaryPolynomial::from_bits("00011"));
    EXPECT_THROW(BinaryPolynomial::from_bits("1101").reversed(2), Error);
}

TEST(MakeField, SmallestPrimitiveModulusMatchesCycleWalk) {
    EXPECT_EQ(make_field(3).modulus(), BinaryPolynomial::from_exponents({0, 1, 3}));
    EXPECT_EQ(make_field(4).modulus(), BinaryPolynomial::from_exponents({0, 1, 4}));
    for (unsigned m = 2; m <= 12; ++m) EXPECT_EQ(make_field(m).modulus_bits(), smallest_primitive_by_walk(m)) << m;
}

TEST(MakeField, RangeAndPrimitivityErrors) {
    EXPECT_THROW(make_field(1), Error);
    EXPECT_THROW(make_field(25), Error);
    try {
        make_field(25);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::size);
    }
    // 1 + x + x^2 + x^3 + x^4 is irreducible but x has order 5.
    try {
        FieldContext::from_modulus(0b11111);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::domain);
    }
}

TEST(FieldContext, TablesAreConsistent) {
    for (unsigned m = 2; m <= 16; ++m) {
        const auto f = make_field(m);
        EXPECT_EQ(f.exp(0), 1U);
        for (std::uint32_t e = 1; e <= f.order(); ++e) EXPECT_EQ(f.exp(f.log(e)), e);
        for (std::uint32_t k = 0; k < f.order(); ++k) EXPECT_EQ(f.log(f.exp(k)), k);
    }
}

TEST(FieldContext, MultiplicationAgreesWithPolynomialArithmetic) {
    for (unsigned m = 2; m <= 6; ++m) {
        const auto f = make_field(m);
        for (std::uint32_t a = 0; a <= f.order(); ++a)
            for (std::uint32_t b = 0; b <= f.order(); ++b)
                ASSERT_EQ(f.mul(a, b), slow_field_mul(a, b, f.modulus_bits(), m));
    }
    std::mt19937_64 rng(17);
    for (unsigned m = 7; m <= 16; ++m) {
        const auto f = make_field(m);
        for (int t = 0; t < 10000; ++t) {
            const auto a = static_cast<std::uint32_t>(rng() % (f.order() + 1));
            const auto b = static_cast<std::uint32_t>(rng() % (f.order() + 1));
            ASSERT_EQ(f.mul(a, b), slow_field_mul(a, b, f.modulus_bits(), m));
        }
    }
}

TEST(FieldContext, Inverse) {
    const auto f = make_field(8);
    for (std::uint32_t a = 1; a <= f.order(); ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
    EXPECT_THROW(f.inv(0), Error);
}

TEST(MinimalPolynomial, Examples) {
    const auto f3 = make_field(3);
    EXPECT_EQ(minimal_polynomial(f3, 0), BinaryPolynomial::from_bits("11"));
    EXPECT_EQ(minimal_polynomial(f3, 1), BinaryPolynomial::from_bits("1101"));
    EXPECT_EQ(minimal_polynomial(make_field(4), 3), BinaryPolynomial::from_bits("11111"));
    EXPECT_THROW(minimal_polynomial(f3, 7), Error);
}

TEST(MinimalPolynomial, RootsDegreeAndCosetInvariance) {
    for (unsigned m = 2; m <= 8; ++m) {
        const auto f = make_field(m);
        const Residue n = f.order();
        for (Residue e = 0; e < n; ++e) {
            const auto p = minimal_polynomial(f, e);
            EXPECT_EQ(p.degree(), coset_size(e, n));
            EXPECT_EQ(evaluate(f, p, e), 0U);
            EXPECT_EQ(p, minimal_polynomial(f, double_mod(e, n)));
        }
    }
}

TEST(MinimalPolynomial, ProductOverLeadersIsXnPlusOne) {
    for (unsigned m = 2; m <= 10; ++m) {
        const auto f = make_field(m);
        const auto table = CosetTable::build(m);
        auto acc = BinaryPolynomial::one();
        for (const auto& c : table.cosets()) acc = acc * minimal_polynomial(f, c.leader);
        EXPECT_EQ(acc, x_pow_n_plus_one(f.order())) << m;
    }
}
