#include "hypheron/gaussian.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace hypheron;

namespace {

GaussRat random_gauss(testutil::RatGen& gen) { return {gen.next(50, 30), gen.next(50, 30)}; }

} // namespace

TEST_CASE("unit-circle product values") {
    const GaussRat z(Rat(3, 5), Rat(4, 5));
    CHECK(z * GaussRat::i() == GaussRat(Rat(-4, 5), Rat(3, 5)));
    CHECK(z * GaussRat(Rat(15, 17), Rat(8, 17)) == GaussRat(Rat(13, 85), Rat(84, 85)));
    CHECK(z * z.conj() == GaussRat(Rat(1)));
}

TEST_CASE("field laws on random triples") {
    testutil::RatGen gen(404);
    for (int i = 0; i < 200; ++i) {
        const GaussRat a = random_gauss(gen), b = random_gauss(gen), c = random_gauss(gen);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).norm() == a.norm() * b.norm());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    CHECK_THROWS_AS(GaussRat(Rat(1)) / GaussRat(), std::domain_error);
}

TEST_CASE("conj(z) * z is real") {
    testutil::RatGen gen(505);
    for (int i = 0; i < 100; ++i) {
        const GaussRat z = random_gauss(gen);
        CHECK((z.conj() * z).is_real());
        CHECK((z.conj() * z).re() == z.norm());
    }
}

TEST_CASE("text form round-trips") {
    testutil::RatGen gen(606);
    for (int i = 0; i < 200; ++i) {
        const GaussRat z = random_gauss(gen);
        CAPTURE(z.str());
        CHECK(GaussRat::parse(z.str()) == z);
    }
    CHECK(GaussRat::parse("3/5+4/5i") == GaussRat(Rat(3, 5), Rat(4, 5)));
    CHECK(GaussRat::parse("-24") == GaussRat(Rat(-24)));
    CHECK(GaussRat::parse("140i") == GaussRat(Rat(0), Rat(140)));
    CHECK(GaussRat::parse("4-14/3i") == GaussRat(Rat(4), Rat(-14, 3)));
    CHECK(GaussRat(Rat(0), Rat(-3, 4)).str() == "-3/4i");
}
