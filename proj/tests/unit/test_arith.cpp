#include "weilforms/arith.hpp"
#include "weilforms/error.hpp"

#include <doctest.h>

using namespace weilforms;

TEST_SUITE("arith") {

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == ratio(1, 2));
    CHECK(parse_rational("-4/8") == ratio(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK(to_string(ratio(-10, 5)) == "-2");
    for (const char* junk : {"", "1/", "/2", "1/0", "a", "1/-2", "1.5", "2//3"}) {
        CAPTURE(junk);
        CHECK_THROWS_AS(parse_rational(junk), Error);
    }
}

TEST_CASE("ratio always returns lowest terms") {
    const Rational q = ratio(8, 2);
    CHECK(is_integer(q));
    CHECK(to_integer(q) == 4);
    CHECK(ratio(9, -6) == ratio(-3, 2));
    CHECK(ratio(9, -6).get_den() == 2);
}

TEST_CASE("floor, ceil and frac") {
    CHECK(floor(ratio(-1, 3)) == -1);
    CHECK(ceil(ratio(-1, 3)) == 0);
    CHECK(frac(ratio(-1, 3)) == ratio(2, 3));
    CHECK(frac(Rational(5)) == 0);
    CHECK_THROWS_AS(to_integer(ratio(1, 2)), Error);
}

TEST_CASE("squares and square roots") {
    CHECK(is_square(Integer(0)));
    CHECK(is_square(Integer(49)));
    CHECK_FALSE(is_square(Integer(50)));
    CHECK_FALSE(is_square(Integer(-4)));
    CHECK(rational_sqrt(ratio(9, 4)) == ratio(3, 2));
    CHECK_FALSE(rational_sqrt(ratio(2, 1)).has_value());
}

TEST_CASE("valuations and powers") {
    CHECK(valuation(Integer(48), Integer(2)) == 4);
    CHECK(valuation(Integer(-45), Integer(3)) == 2);
    CHECK(valuation(Integer(0), Integer(5)) == kInfiniteValuation);
    CHECK(power(ratio(2, 3), -2) == ratio(9, 4));
    CHECK(power(Integer(3), 4UL) == 81);
}

TEST_CASE("factorization matches trial multiplication") {
    for (long n = 1; n <= 2000; ++n) {
        Integer back = 1;
        for (const auto& [p, e] : factor(Integer(n))) back *= power(p, e);
        REQUIRE(back == n);
    }
    const auto f = factor(Integer("1000000007") * 6);
    CHECK(f.size() == 3);
    CHECK(f.at(Integer("1000000007")) == 1);
    CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(Integer(-90)) == std::vector<Integer>{2, 3, 5});
}

TEST_CASE("kronecker symbol and fundamental discriminants") {
    CHECK(kronecker(Integer(-4), Integer(3)) == -1);
    CHECK(kronecker(Integer(5), Integer(2)) == -1);
    CHECK(kronecker(Integer(12), Integer(3)) == 0);
    CHECK(fundamental_discriminant(Integer(-12)) == -3);
    CHECK(fundamental_discriminant(Integer(8)) == 8);
    CHECK(fundamental_discriminant(Integer(45)) == 5);
    CHECK(fundamental_discriminant(Integer(-16)) == -4);
    CHECK(fundamental_discriminant(Integer(36)) == 1);
}

TEST_CASE("half integers") {
    const HalfInteger k = HalfInteger::from_rational(ratio(11, 2));
    CHECK(k.twice() == 11);
    CHECK_FALSE(k.is_integral());
    CHECK(k.str() == "11/2");
    CHECK(HalfInteger(10).value() == 5);
    CHECK(HalfInteger(7) < HalfInteger(8));
    CHECK_THROWS_AS(HalfInteger::from_rational(ratio(1, 3)), Error);
}

TEST_CASE("content hash is stable") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

}
