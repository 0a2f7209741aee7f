// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <fdx/rational.hpp>

using fdx::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5, 1).is_integer());
    CHECK(Rational(7, 7).num() == 1);
    CHECK(Rational(7, 7).den() == 1);
}

TEST_CASE("rational construction rejects bad input") {
    CHECK_THROWS_AS(Rational(1, 0), fdx::Error);
    CHECK_THROWS_AS(Rational(INT64_MIN, 3), fdx::OverflowError);
    CHECK_THROWS_AS(Rational(3, INT64_MIN), fdx::OverflowError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), fdx::Error);

    Rational acc(0);
    for (int i = 0; i < 10; ++i)
        acc += Rational(1, 10);
    CHECK(acc == Rational(1));
}

TEST_CASE("rational comparisons avoid overflow") {
    const Rational big(INT64_MAX / 2, 3);
    const Rational bigger(INT64_MAX / 2, 2);
    CHECK(big < bigger);
    CHECK(bigger > big);
    CHECK(big <= big);
    CHECK(Rational(-1, 3) < Rational(1, 7));
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("rational arithmetic overflow throws instead of wrapping") {
    const Rational huge(INT64_MAX, 1);
    CHECK_THROWS_AS(huge + huge, fdx::OverflowError);
    CHECK_THROWS_AS(huge * Rational(2), fdx::OverflowError);
    CHECK_THROWS_AS(-Rational(INT64_MIN + 1) + Rational(2), fdx::OverflowError);
}

TEST_CASE("parse accepts integers, fractions, and decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("-0.35") == Rational(-7, 20));
    CHECK(Rational::parse("2.6e-1") == Rational(13, 50));
    CHECK(Rational::parse("2.5e2") == Rational(250));
    CHECK(Rational::parse("1e+2") == Rational(100));
    CHECK(Rational::parse(" 0.25 ") == Rational(1, 4));
    CHECK(Rational::parse("+0.75") == Rational(3, 4));
}

TEST_CASE("parse rejects malformed and overflowing input") {
    CHECK_THROWS_AS(Rational::parse(""), fdx::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), fdx::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), fdx::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), fdx::ParseError);
    CHECK_THROWS_AS(Rational::parse("1//2"), fdx::ParseError);
    CHECK_THROWS_AS(Rational::parse("99999999999999999999"), fdx::OverflowError);
    CHECK_THROWS_AS(Rational::parse("1e9999"), fdx::OverflowError);
}

TEST_CASE("to_string and to_decimal_string render exactly") {
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(1, 2).to_decimal_string() == "0.5");
    CHECK(Rational(-7, 20).to_decimal_string() == "-0.35");
    CHECK(Rational(13, 50).to_decimal_string() == "0.26");
    CHECK(Rational(3).to_decimal_string() == "3");
    CHECK(Rational(1, 3).to_decimal_string() == "1/3");
    CHECK(Rational(1, 7).to_decimal_string() == "1/7");
    CHECK(Rational(1, 1024).to_decimal_string() == "0.0009765625");
}

TEST_CASE("parse and render round-trip") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::int64_t> num(-5000, 5000);
    std::uniform_int_distribution<std::int64_t> den(1, 200);
    for (int i = 0; i < 500; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.to_string()) == r);
        CHECK(Rational::parse(r.to_decimal_string()) == r);
    }
}

TEST_CASE("min, max, pos_part, abs, lcm") {
    CHECK(fdx::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(fdx::max(Rational(-1), Rational(-2)) == Rational(-1));
    CHECK(fdx::pos_part(Rational(-5, 7)) == Rational(0));
    CHECK(fdx::pos_part(Rational(5, 7)) == Rational(5, 7));
    CHECK(fdx::abs(Rational(-9, 2)) == Rational(9, 2));
    CHECK(fdx::checked_lcm(4, 6) == 12);
    CHECK(fdx::checked_lcm(1, 1) == 1);
    CHECK(fdx::checked_lcm(10, 5) == 10);
    CHECK_THROWS_AS(fdx::checked_lcm(INT64_MAX, INT64_MAX - 1), fdx::OverflowError);
}
