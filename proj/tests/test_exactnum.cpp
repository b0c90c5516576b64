#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>

#include "finstage/error.hpp"
#include "finstage/exactnum.hpp"

using namespace finstage;

namespace {

BigRational frac(long p, long q) { return BigRational(BigInt(p), BigInt(q)); }

// Fractions kept as raw (p, q) pairs with no reduction; equality and order by
// cross multiplication.
struct NaiveFraction {
    std::int64_t p;
    std::int64_t q; // > 0
};

NaiveFraction naive_add(NaiveFraction a, NaiveFraction b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
NaiveFraction naive_mul(NaiveFraction a, NaiveFraction b) { return {a.p * b.p, a.q * b.q}; }
int naive_cmp(NaiveFraction a, NaiveFraction b)
{
    std::int64_t l = a.p * b.q;
    std::int64_t r = b.p * a.q;
    return (l > r) - (l < r);
}
bool same_value(const BigRational& x, NaiveFraction f)
{
    return x.numerator() * BigInt(static_cast<long>(f.q)) == BigInt(static_cast<long>(f.p)) * x.denominator();
}

} // namespace

TEST_CASE("rational examples")
{
    CHECK(rat_add(frac(1, 3), frac(1, 4)) == frac(7, 12));
    CHECK(rat_add(frac(5, 9), BigRational(0)) == frac(5, 9));
    CHECK(rat_mul(frac(1, 2), BigRational(2)) == BigRational(1));
    CHECK(rat_cmp(frac(1, 3), frac(1, 4)) == std::strong_ordering::greater);
    CHECK(frac(7, 12).to_string() == "7/12");
    CHECK(frac(4, 2).to_string() == "2");
    CHECK(frac(3, -6).to_string() == "-1/2");
}

TEST_CASE("rationals agree with a non-canonicalizing oracle")
{
    std::mt19937_64 rng(20241015);
    std::uniform_int_distribution<int> num(-1000, 1000);
    std::uniform_int_distribution<int> den(1, 1000);
    for (int trial = 0; trial < 10000; ++trial) {
        NaiveFraction a{num(rng), den(rng)};
        NaiveFraction b{num(rng), den(rng)};
        BigRational x = frac(a.p, a.q);
        BigRational y = frac(b.p, b.q);

        BigRational sum = rat_add(x, y);
        BigRational product = rat_mul(x, y);
        REQUIRE(same_value(sum, naive_add(a, b)));
        REQUIRE(same_value(product, naive_mul(a, b)));
        REQUIRE((rat_cmp(x, y) < 0) == (naive_cmp(a, b) < 0));
        REQUIRE((rat_cmp(x, y) == 0) == (naive_cmp(a, b) == 0));

        // canonical: lowest terms, positive denominator
        for (const auto& r : {sum, product}) {
            REQUIRE(r.denominator() > 0);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            REQUIRE(g == 1);
        }
    }
}

TEST_CASE("rational parsing")
{
    CHECK(BigRational::parse("6/8") == frac(3, 4));
    CHECK(BigRational::parse("-5") == BigRational(-5));
    CHECK_THROWS_AS(BigRational::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(BigRational::parse("x/2"), InvalidInput);
    CHECK_THROWS_AS(BigRational::parse(""), InvalidInput);
}

TEST_CASE("decimal expansion truncates")
{
    CHECK(to_decimal(frac(2, 3), 5) == "0.66666...");
    CHECK(to_decimal(frac(1, 8), 3) == "0.125");
    CHECK(to_decimal(frac(1, 8), 5) == "0.12500");
    CHECK(to_decimal(frac(-7, 3), 2) == "-2.33...");
    CHECK(to_decimal(frac(1, 3), 0) == "0...");
}

TEST_CASE("dyadic_from_string")
{
    CHECK(dyadic_from_string(BinaryString::parse("1")).value() == frac(1, 2));
    CHECK(dyadic_from_string(BinaryString::parse("011")).value() == frac(3, 8));

    auto canonical = dyadic_from_string(BinaryString::parse("10"));
    CHECK(canonical == dyadic_from_string(BinaryString::parse("1")));
    CHECK(canonical.numerator() == 1);
    CHECK(canonical.exponent() == 1);

    auto zero = dyadic_from_string(BinaryString::parse("000"));
    CHECK(zero.numerator() == 0);
    CHECK(zero.exponent() == 0);

    CHECK_THROWS_AS(dyadic_from_string(BinaryString()), EmptyString);
    CHECK_THROWS_AS(BinaryString::parse("012"), InvalidInput);
}

TEST_CASE("dyadic value matches the place-value sum and absorbs trailing zeros")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t length = 1 + rng() % 40;
        BinaryString s;
        for (std::size_t i = 0; i < length; ++i) {
            s.push_back(static_cast<int>(rng() & 1));
        }
        BigRational place_value;
        for (std::size_t i = 1; i <= s.size(); ++i) {
            if (s.bit(i)) {
                place_value += inverse_pow2(i);
            }
        }
        DyadicRational d = dyadic_from_string(s);
        REQUIRE(d.value() == place_value);
        REQUIRE((d.numerator() == 0 || mpz_odd_p(d.numerator().get_mpz_t())));

        BinaryString padded = BinaryString::parse(s.str() + "0");
        REQUIRE(dyadic_from_string(padded) == d);
    }
}

TEST_CASE("dyadic from rational")
{
    CHECK(DyadicRational::from_rational(frac(3, 8)) == DyadicRational(3, 3));
    CHECK_FALSE(DyadicRational::from_rational(frac(1, 3)).has_value());
    CHECK(DyadicRational(12, 4) == DyadicRational(3, 2));
    CHECK(DyadicRational(12, 1) == DyadicRational(6, 0));
}

TEST_CASE("interval basics")
{
    CHECK_THROWS(RationalInterval(BigRational(1), BigRational(0)));
    RationalInterval outer(frac(1, 4), frac(3, 4));
    RationalInterval inner(frac(1, 3), frac(1, 2));
    CHECK(outer.contains(inner));
    CHECK_FALSE(inner.contains(outer));
    CHECK(outer.to_string() == "[1/4, 3/4]");
    CHECK((outer + inner) == RationalInterval(frac(7, 12), frac(5, 4)));
}

TEST_CASE("log2 enclosure is a point on powers of two")
{
    CHECK(log2_enclosure(BigRational(1), 32) == RationalInterval::point(BigRational(0)));
    CHECK(log2_enclosure(BigRational(8), 32) == RationalInterval::point(BigRational(3)));
    CHECK(log2_enclosure(frac(1, 4), 32) == RationalInterval::point(BigRational(-2)));
}

TEST_CASE("log2 enclosure brackets the true value by integer powers")
{
    // 2^lo <= n <= 2^hi checked on a coarser grid: with A = floor(lo * 2^g) and
    // B = ceil(hi * 2^g), 2^A <= n^(2^g) <= 2^B.
    const unsigned long grid = 12;
    for (unsigned long n : {3UL, 5UL, 6UL, 7UL, 10UL, 1000UL, 65537UL}) {
        RationalInterval enc = log2_enclosure(BigRational(BigInt(n)), 32);
        REQUIRE(enc.width() <= inverse_pow2(32));
        BigInt scale = pow2(grid);
        BigInt a = enc.lo().numerator() * scale / enc.lo().denominator();
        BigInt b_num = enc.hi().numerator() * scale;
        BigInt b;
        mpz_cdiv_q(b.get_mpz_t(), b_num.get_mpz_t(), enc.hi().denominator().get_mpz_t());
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), n, 1UL << grid);
        CHECK(pow2(a.get_ui()) <= power);
        CHECK(power <= pow2(b.get_ui()));
    }
}

TEST_CASE("log2 enclosure of an interval and of fractions below one")
{
    RationalInterval enc = log2_enclosure(frac(1, 3), 20);
    RationalInterval three = log2_enclosure(BigRational(3), 20);
    CHECK(enc.lo() == -three.hi());
    CHECK(enc.hi() == -three.lo());

    RationalInterval wide = log2_enclosure(RationalInterval(BigRational(3), BigRational(5)), 16);
    CHECK(wide.contains(log2_enclosure(BigRational(4), 16)));
}
