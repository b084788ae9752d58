#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcc/dyadic.hpp"
#include "bcc/errors.hpp"

using bcc::BigInt;
using bcc::Dyadic;

TEST_CASE("normalization keeps numerators odd") {
    Dyadic d(BigInt(8), 5);  // 8/32 = 1/4
    CHECK(d.numerator() == 1);
    CHECK(d.exponent() == 2);
    CHECK(d == Dyadic(BigInt(2), 3));
    Dyadic z(BigInt(0), 7);
    CHECK(z.is_zero());
    CHECK(z.exponent() == 0);
}

TEST_CASE("addition is exact") {
    Dyadic half = Dyadic::pow2_neg(1);
    Dyadic quarter = Dyadic::pow2_neg(2);
    Dyadic sum = half + quarter + quarter;
    CHECK(sum == Dyadic::from_integer(1));
    CHECK(sum.is_integer());

    // 1/2 + 1/8 = 5/8
    Dyadic x = half + Dyadic::pow2_neg(3);
    CHECK(x.numerator() == 5);
    CHECK(x.exponent() == 3);
}

TEST_CASE("comparisons cross exponents") {
    CHECK(Dyadic::pow2_neg(1) > Dyadic::pow2_neg(2));
    CHECK(Dyadic(BigInt(3), 2) < Dyadic::from_integer(1));  // 3/4 < 1
    CHECK(Dyadic(BigInt(3), 2) >= Dyadic(BigInt(6), 3));
    CHECK(Dyadic(BigInt(7), 3) <= Dyadic::from_integer(1));
}

TEST_CASE("floor and ceil") {
    Dyadic x(BigInt(7), 2);  // 7/4
    CHECK(x.floor() == 1);
    CHECK(x.ceil() == 2);
    CHECK(Dyadic::from_integer(3).ceil() == 3);
    CHECK(Dyadic(BigInt(0), 0).ceil() == 0);
    CHECK(Dyadic(BigInt(1), 10).ceil() == 1);  // tiny positive rounds up
}

TEST_CASE("power sums match closed forms") {
    // degrees all 2 over 4 vertices: 4 * 1/4 = 1
    CHECK(bcc::dyadic_power_sum({2, 2, 2, 2}) == Dyadic::from_integer(1));
    // degrees 1,2,2: 1/2 + 1/4 + 1/4 = 1
    CHECK(bcc::dyadic_power_sum({1, 2, 2}) == Dyadic::from_integer(1));
    // empty degrees: 0
    CHECK(bcc::dyadic_power_sum({}).is_zero());
    // all-zero degrees count each vertex fully
    CHECK(bcc::dyadic_power_sum({0, 0, 0}) == Dyadic::from_integer(3));
}

TEST_CASE("huge exponents are exact") {
    Dyadic tiny = Dyadic::pow2_neg(500);
    Dyadic sum;
    for (int i = 0; i < 1024; ++i) sum += tiny;
    CHECK(sum == Dyadic::pow2_neg(490));
    CHECK(sum.to_double() == doctest::Approx(std::pow(2.0, -490)));
}

TEST_CASE("negative numerators and oversized exponents are rejected") {
    CHECK_THROWS_AS(Dyadic(BigInt(-1), 0), bcc::DomainError);
    CHECK_THROWS_AS(Dyadic(BigInt(1), 20000), bcc::ResourceError);
}
