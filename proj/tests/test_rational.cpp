#include "rcds/rational.hpp"

#include "rcds/error.hpp"

#include <doctest.h>

using namespace rcds;

TEST_CASE("fractions, integers and decimals parse exactly") {
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("0.3") == Rational(3, 10));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("2.") == Rational(2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("+7/2") == Rational(7, 2));
}

TEST_CASE("canonical form has lowest terms and positive denominator") {
    Rational q = parse_rational("10/4");
    CHECK(q.get_num() == 5);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "5/2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("-3/9")) == "-1/3");
}

TEST_CASE("malformed tokens are rejected") {
    CHECK_THROWS_AS(parse_rational(""), error);
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(parse_rational("a"), error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), error);
    CHECK_THROWS_AS(parse_rational("1e3"), error);
    CHECK_THROWS_AS(parse_rational("."), error);
    CHECK_THROWS_AS(parse_rational("-"), error);
}

TEST_CASE("arbitrary precision survives long tokens") {
    Rational q = parse_rational("123456789012345678901234567890/2");
    CHECK(to_string(q) == "61728394506172839450617283945");
}
