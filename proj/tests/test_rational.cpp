#include <doctest.h>

#include "dpfl/errors.hpp"
#include "dpfl/rational.hpp"

using namespace dpfl;

TEST_CASE("parse_rational accepts integers, fractions and finite decimals") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("3/6") == frac(1, 2));
    CHECK(parse_rational("-31/10") == frac(-31, 10));
    CHECK(parse_rational("3.1") == frac(31, 10));
    CHECK(parse_rational("-0.25") == frac(-1, 4));
    CHECK(parse_rational("10.00") == Rational(10));
    CHECK(parse_rational(" 7/5 ") == frac(7, 5));
    CHECK(parse_rational("1000000") == Rational(1000000));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("-"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1 2"), ParseError);
}

TEST_CASE("parsed values are canonical") {
    Rational r = parse_rational("4/8");
    CHECK(r.get_num() == 1);
    CHECK(r.get_den() == 2);
    CHECK(to_fraction_string(r) == "1/2");
    CHECK(to_fraction_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_fraction_string(Rational(7)) == "7");
}

TEST_CASE("frac canonicalizes and rejects zero denominators") {
    CHECK(frac(2, 4) == frac(1, 2));
    CHECK(frac(3, -6) == frac(-1, 2));
    CHECK_THROWS_AS(frac(1, 0), InvalidRange);
}

TEST_CASE("decimal rendering rounds half away from zero and marks truncation") {
    CHECK(to_decimal_string(frac(7, 5), 2) == "1.40");
    CHECK(to_decimal_string(frac(1, 3), 3) == "0.333~");
    CHECK(to_decimal_string(frac(-1, 3), 3) == "-0.333~");
    CHECK(to_decimal_string(frac(1, 2), 0) == "1~");
    CHECK(to_decimal_string(Rational(2), 0) == "2");
    CHECK(to_decimal_string(frac(1999, 1001), 4) == "1.9970~");
    CHECK(to_decimal_string(frac(-3, 2), 0) == "-2~");
}
