#include <doctest.h>

#include "trimult/bigfloat.hpp"

using namespace trimult;

TEST_CASE("precision is preserved through arithmetic") {
    BigFloat a(1L, 256), b(1L, 320);
    CHECK(a.precision() == 256);
    CHECK((a + b).precision() == 320);
    CHECK((a * b).precision() == 320);
    CHECK((b / a).precision() == 320);
}

TEST_CASE("sqrt and root hit algebraic identities to precision") {
    BigFloat two(2L, 256);
    BigFloat err = (two.sqrt() * two.sqrt() - two).abs();
    CHECK(err < BigFloat::pow2(-250, 256));

    BigFloat eight(8L, 256);
    CHECK((eight.root(3) - BigFloat(2L, 256)).abs() < BigFloat::pow2(-250, 256));

    // theta for k = 5: root(9 + 4*sqrt(5), 2) should be 2 + sqrt(5)
    BigFloat five(5L, 256);
    BigFloat theta = BigFloat(9L, 256) + BigFloat(4L, 256) * five.sqrt();
    BigFloat alpha = theta.root(2);
    CHECK((alpha - (BigFloat(2L, 256) + five.sqrt())).abs() < BigFloat::pow2(-248, 256));
}

TEST_CASE("pi and trig") {
    BigFloat pi = BigFloat::pi(256);
    CHECK((pi.cos() + BigFloat(1L, 256)).abs() < BigFloat::pow2(-250, 256));
    CHECK(pi.sin().abs() < BigFloat::pow2(-250, 256));
}

TEST_CASE("rounding helpers") {
    BigFloat x = BigFloat(12L, 256) / BigFloat(5L, 256);  // 2.4
    CHECK(x.round_nearest() == 2);
    BigFloat d = x.distance_to_nearest_int();
    CHECK(d > BigFloat(0L, 256));
    CHECK((d - BigFloat(2L, 256) / BigFloat(5L, 256)).abs() < BigFloat::pow2(-250, 256));

    BigFloat negative(-7L, 256);
    CHECK(negative.round_nearest() == -7);
    CHECK(negative.distance_to_nearest_int() == BigFloat(0L, 256));
}

TEST_CASE("rationals and integers convert exactly") {
    BigRat third = make_rational(1, 3);
    BigFloat f(third, 256);
    CHECK((f * BigFloat(3L, 256) - BigFloat(1L, 256)).abs() < BigFloat::pow2(-250, 256));

    BigInt big("340282366920938463463374607431768211456");  // 2^128
    BigFloat g(big, 256);
    CHECK(g == BigFloat::pow2(128, 256));
}
