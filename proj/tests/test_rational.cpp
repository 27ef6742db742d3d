#include <doctest.h>

#include "pencil/rational.hpp"

using namespace pencil;

TEST_CASE("rational construction canonicalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(rat(-6, -4) == rat(3, 2));
    CHECK(rat(0, 7) == rat(0));
    CHECK(rat(1, 2).get_den() == 2);   // den kept positive
    CHECK(rat(1, -2).get_den() == 2);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(rat(5)) == "5");
    CHECK(rat_from_string("3/6") == rat(1, 2));
    CHECK(rat_from_string("-7") == rat(-7));
    CHECK(rat_from_string(rat_to_string(rat(22, -8))) == rat(-11, 4));
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(2, 3) * rat(9, 4) == rat(3, 2));
    CHECK(rat(1, 3) - rat(1, 3) == rat(0));
    CHECK(rat(1, 7) / rat(2, 7) == rat(1, 2));
    // a value that overflows any fixed-width integer arithmetic
    Rational big = rat_from_string("123456789012345678901234567890/2");
    CHECK(rat_to_string(big + big) == "123456789012345678901234567890");
}

TEST_CASE("rational predicates") {
    CHECK(rat_is_zero(rat(0)));
    CHECK(!rat_is_zero(rat(1, 9)));
    CHECK(rat_is_integer(rat(8, 4)));
    CHECK(!rat_is_integer(rat(1, 2)));
}

TEST_CASE("content gcd over Q") {
    // gcd(num)/lcm(den): both inputs divided by it become coprime integers
    CHECK(rat_content_gcd(rat(4, 3), rat(2, 9)) == rat(2, 9));
    CHECK(rat_content_gcd(rat(-4, 3), rat(2, 3)) == rat(2, 3));
    CHECK(rat_content_gcd(rat(0), rat(0)) == rat(0));
    CHECK(rat_content_gcd(rat(0), rat(5, 2)) == rat(5, 2));
    Rational g = rat_content_gcd(rat(6, 5), rat(9, 10));
    CHECK(rat_is_integer(rat(6, 5) / g));
    CHECK(rat_is_integer(rat(9, 10) / g));
    CHECK(g == rat(3, 10));
}
