#include <doctest.h>

#include <cmath>

#include "minkowski/errors.hpp"
#include "minkowski/rational.hpp"

using namespace minkowski;

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("2/4").to_string() == "1/2");
    CHECK(Rational::parse("-3/6") == Rational(-1) / Rational(2));
    CHECK(Rational::parse("7").to_string() == "7");
    CHECK(Rational::parse("0/5").to_string() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("a/2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
}

TEST_CASE("rational ordering is exact") {
    const Rational a = Rational::parse("1000000000000000000001/3000000000000000000000");
    const Rational b = Rational::parse("1/3");
    CHECK(b < a);
    CHECK(a.den() == mpz_class("3000000000000000000000"));
}

TEST_CASE("rational from double is the exact binary value") {
    CHECK(Rational::from_double(0.5) == Rational::parse("1/2"));
    CHECK(Rational::from_double(0.1).den() == mpz_class("36028797018963968"));  // 2^55
    CHECK_THROWS_AS(Rational::from_double(std::nan("")), DomainError);
}

TEST_CASE("dyadic normalization keeps the numerator odd") {
    const Dyadic d(mpz_class(12), 5);  // 12/32 = 3/8
    CHECK(d.num() == 3);
    CHECK(d.exp() == 3);
    CHECK(d.to_string() == "3/8");
    CHECK(Dyadic(mpz_class(0), 9).exp() == 0);
    CHECK(Dyadic(mpz_class(4), 1).to_string() == "2");
}

TEST_CASE("dyadic parse accepts both spellings") {
    CHECK(Dyadic::parse("3/2^3") == Dyadic(mpz_class(3), 3));
    CHECK(Dyadic::parse("3/8") == Dyadic(mpz_class(3), 3));
    CHECK(Dyadic::parse("1") == Dyadic(mpz_class(1), 0));
    CHECK_THROWS_AS(Dyadic::parse("1/3"), DomainError);
    CHECK_THROWS_AS(Dyadic::parse("1/2^x"), DomainError);
}

TEST_CASE("dyadic arithmetic and comparison") {
    const Dyadic half(mpz_class(1), 1), eighth(mpz_class(1), 3);
    CHECK(half - eighth == Dyadic(mpz_class(3), 3));
    CHECK(half + half == Dyadic(mpz_class(1), 0));
    CHECK(half.half() == Dyadic(mpz_class(1), 2));
    CHECK(eighth < half);
    CHECK(Dyadic::pow2(4) == Dyadic(mpz_class(1), 4));
    CHECK(Dyadic::pow2(-2) == Dyadic(mpz_class(4), 0));
    CHECK((half - eighth).to_rational() == Rational::parse("3/8"));
}

TEST_CASE("dyadic from double round-trips") {
    for (double v : {0.0, 1.0, 0.375, 0.1, 1e-300, 0.6666666666666666}) {
        CHECK(Dyadic::from_double(v).to_double() == v);
        CHECK(Dyadic::from_double(v).to_rational() == Rational::from_double(v));
    }
}
