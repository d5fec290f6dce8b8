#include "hypheron/rat.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace hypheron;

TEST_CASE("canonical form: lowest terms, positive denominator, zero is 0/1") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4).num() == -1);
    CHECK(Rat(2, -4).num() == -1);
    CHECK(Rat(2, -4).den() == 2);
    CHECK(Rat(0, 7).den() == 1);
    CHECK(Rat(0, 7).str() == "0");
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("field ops are exact: (a+b)-b = a, a*b/b = a on random values") {
    testutil::RatGen gen(101);
    for (int i = 0; i < 300; ++i) {
        const Rat a = gen.next(1000, 500);
        const Rat b = gen.next(1000, 500, false);
        CHECK((a + b) - b == a);
        CHECK(a * b / b == a);
        CHECK(gcd(abs((a + b).num()), (a + b).den()) == 1);
    }
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
}

TEST_CASE("rat_sqrt on perfect squares and non-squares") {
    CHECK(rat_sqrt(Rat(25, 16)) == Rat(5, 4));
    CHECK_FALSE(rat_sqrt(Rat(2)));
    CHECK_FALSE(rat_sqrt(Rat(341, 64)));   // 341 = 11*31 squarefree
    CHECK_FALSE(rat_sqrt(Rat(-4)));
    CHECK(rat_sqrt(Rat(0)) == Rat(0));
}

TEST_CASE("rat_sqrt(q^2) = |q| on 1000 random rationals") {
    testutil::RatGen gen(202);
    for (int i = 0; i < 1000; ++i) {
        const Rat q = gen.next(5000, 999);
        CHECK(rat_sqrt(q * q) == abs(q));
    }
}

TEST_CASE("rat_height") {
    CHECK(rat_height(Rat(5, 4)) == 5);
    CHECK(rat_height(Rat(-7, 3)) == 7);
    CHECK(rat_height(Rat(0)) == 1);
    CHECK(rat_height(Rat(3, 11)) == 11);
}

TEST_CASE("text form round-trips exactly") {
    testutil::RatGen gen(303);
    for (int i = 0; i < 200; ++i) {
        const Rat q = gen.next(100000, 99999);
        CHECK(Rat::parse(q.str()) == q);
    }
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(-7, 3).str() == "-7/3");
    CHECK_FALSE(Rat::parse(""));
    CHECK_FALSE(Rat::parse("1.5"));
    CHECK_FALSE(Rat::parse("3/0"));
    CHECK_FALSE(Rat::parse("a/b"));
}

TEST_CASE("ordering and pow") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(pow_int(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(pow_int(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(pow_int(Rat(5), 0) == Rat(1));
}
