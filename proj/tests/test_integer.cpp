#include <doctest.h>

#include <random>

#include "trimult/integer.hpp"

using namespace trimult;

TEST_CASE("isqrt on known values") {
    auto r0 = isqrt(BigInt(0));
    CHECK(r0.root == 0);
    CHECK(r0.exact);

    auto r450 = isqrt(BigInt(450));
    CHECK(r450.root == 21);
    CHECK_FALSE(r450.exact);

    auto r9900 = isqrt(BigInt(9900));  // 9900 = 99 * 100
    CHECK(r9900.root == 99);
    CHECK_FALSE(r9900.exact);

    auto sq = isqrt(BigInt(144));
    CHECK(sq.root == 12);
    CHECK(sq.exact);

    CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("isqrt brackets random 512-bit inputs") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        BigInt n = 1;
        for (int limb = 0; limb < 8; ++limb) n = (n << 64) + BigInt(static_cast<unsigned long>(rng()));
        auto r = isqrt(n);
        CHECK(r.root * r.root <= n);
        CHECK((r.root + 1) * (r.root + 1) > n);
        CHECK(r.exact == (r.root * r.root == n));
    }
}

namespace {

// independent squarefreeness check by trial division
bool squarefree_by_trial(const BigInt& d) {
    for (BigInt p = 2; p * p <= d; ++p)
        if (mpz_divisible_p(d.get_mpz_t(), BigInt(p * p).get_mpz_t())) return false;
    return true;
}

}  // namespace

TEST_CASE("squarefree_core on known values") {
    auto r80 = squarefree_core(BigInt(80));
    CHECK(r80.core == 5);
    CHECK(r80.factor == 4);

    auto r1 = squarefree_core(BigInt(1));
    CHECK(r1.core == 1);
    CHECK(r1.factor == 1);

    auto big = squarefree_core(BigInt(648) * BigInt(650));  // 421200
    CHECK(big.core == 13);
    CHECK(big.factor == 180);

    CHECK_THROWS_AS(squarefree_core(BigInt(0)), std::domain_error);
}

TEST_CASE("squarefree_core decomposes every m up to 1e5") {
    for (long m = 1; m <= 100000; ++m) {
        auto r = squarefree_core(BigInt(m));
        REQUIRE(r.core * r.factor * r.factor == m);
        if (m % 9973 == 0 || m < 2000)  // full trial check on a sample
            REQUIRE(squarefree_by_trial(r.core));
    }
}

TEST_CASE("rationals stay canonical") {
    BigRat r = make_rational(BigInt(6), BigInt(4));
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 2);

    BigRat neg = make_rational(BigInt(1), BigInt(-2));
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);

    BigRat sum = r + neg;  // 3/2 - 1/2 = 1
    CHECK(sum.get_num() == 1);
    CHECK(sum.get_den() == 1);

    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("decimal and fraction strings round-trip") {
    BigInt big("123456789012345678901234567890");
    CHECK(parse_decimal(to_decimal(big)) == big);
    CHECK(parse_decimal("-42") == -42);
    CHECK_THROWS_AS(parse_decimal("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);

    CHECK(to_fraction_string(make_rational(-3, 32)) == "-3/32");
    CHECK(to_fraction_string(make_rational(7, 1)) == "7");
    CHECK(parse_fraction("-3/32") == make_rational(-3, 32));
    CHECK(parse_fraction("5") == make_rational(5, 1));
    CHECK_THROWS_AS(parse_fraction("ab/c"), std::invalid_argument);
}
