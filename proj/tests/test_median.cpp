#include "hypheron/median_family.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace hypheron;

namespace {

MedianFamily random_family(testutil::RatGen& gen) {
    for (;;) {
        const Rat u = gen.positive(9, 4) + Rat(1);
        const Rat w = gen.positive(9, 4) + Rat(1);
        try {
            MedianFamily f(u, w);
            if (!f.degenerate_side()) return f;
        } catch (const SingularFamily&) {
        }
    }
}

} // namespace

TEST_CASE("family fixture (u,w) = (2,3)") {
    const MedianFamily f(Rat(2), Rat(3));
    CHECK(f.curve().a2() == Rat(2056));
    CHECK(f.curve().a4() == Rat(1400400));
    CHECK(f.curve().a6() == Rat(324000000));
    CHECK(f.curve().discriminant() == f.discriminant_closed_form());

    CHECK_THROWS_AS(MedianFamily(Rat(0), Rat(3)), SingularFamily);
    CHECK_THROWS_AS(MedianFamily(Rat(2), Rat(0)), SingularFamily);

    // u = 1 builds but is flagged: every triangle has side a = 0
    const MedianFamily g(Rat(1), Rat(3));
    CHECK(g.degenerate_side());
    CHECK(g.enumerate(5).empty());
}

TEST_CASE("discriminant closed form on 30 random families") {
    testutil::RatGen gen(131);
    for (int i = 0; i < 30; ++i) {
        const MedianFamily f = random_family(gen);
        CHECK(f.curve().discriminant() == f.discriminant_closed_form());
    }
}

TEST_CASE("median quartic encodes 2 cosh(m) cosh(a/2) = cosh(b) + cosh(c)") {
    // identity: quartic(u,v,w) = (2vw(u^2+1))^2 (cosh^2 m - 1) with
    // cosh m = u(v^2w + w + vw^2 + v) / (2vw(u^2+1)), on random parameters
    testutil::RatGen gen(242);
    for (int i = 0; i < 100; ++i) {
        const Rat u = gen.positive(9, 4) + Rat(1);
        const Rat v = gen.positive(9, 4) + Rat(1);
        const Rat w = gen.positive(9, 4) + Rat(1);
        const Rat scale = Rat(2) * v * w * (u * u + Rat(1));
        const Rat cosh_m = u * (v * v * w + w + v * w * w + v) / scale;
        CHECK(median_quartic(u, v, w) == scale.squared() * (cosh_m * cosh_m - Rat(1)));
    }
    // zero median: v = w = u has cosh b + cosh c = 2 cosh(a/2) (the b + c = a
    // boundary), so the quartic vanishes
    const Rat u(2);
    CHECK(median_quartic(u, u, u) == Rat(0));
    CHECK(median_quartic(Rat(7, 3), Rat(7, 3), Rat(7, 3)) == Rat(0));
}

TEST_CASE("P(u,w) fixture and infinite order on 20 random families") {
    const MedianFamily f(Rat(2), Rat(3));
    CHECK(f.point_p() == RatPoint{Rat(0), Rat(18000)});
    CHECK(f.curve().contains(f.point_p()));
    CHECK(Rat(18000).squared() == f.curve().a6());
    CHECK(f.curve().contains(f.curve().neg(f.point_p())));

    testutil::RatGen gen(353);
    for (int i = 0; i < 20; ++i) {
        const MedianFamily g = random_family(gen);
        REQUIRE(g.curve().contains(g.point_p()));
        CHECK_FALSE(g.curve().torsion_order(g.point_p(), kTorsionBoundQ));
    }
}

TEST_CASE("forward/inverse round trips over multiples of P, 100+ samples") {
    testutil::RatGen gen(464);
    int trips = 0;
    while (trips < 100) {
        const MedianFamily f = random_family(gen);
        const RatPoint P = f.point_p();
        RatPoint fwd = RatPoint::inf();
        for (long k = 1; k <= 5; ++k) {
            fwd = f.curve().add(fwd, P);
            for (const RatPoint& p : {fwd, f.curve().neg(fwd)}) {
                if (p.infinity || p.x.is_zero()) continue;
                const auto [v, t] = f.inverse(p);
                REQUIRE(t * t == f.quartic_t2(v));
                CHECK(f.forward(v, t) == p);
                ++trips;
            }
        }
    }
    CHECK(trips >= 100);
}

TEST_CASE("map error loci") {
    const MedianFamily f(Rat(2), Rat(3));
    CHECK_THROWS_AS(f.inverse(f.point_p()), MapUndefined);       // x = 0
    CHECK_THROWS_AS(f.inverse(RatPoint::inf()), MapUndefined);
    CHECK_THROWS_AS(f.forward(Rat(2), Rat(1)), NotOnQuartic);
}

TEST_CASE("triangle generation at (2,3): exact rational medians") {
    const MedianFamily f(Rat(2), Rat(3));
    const auto found = f.enumerate(10);
    REQUIRE(!found.empty());
    const RatLength half_a(Rat(2));
    for (const auto& tri : found) {
        CHECK(tri.exp_a == Rat(4));
        CHECK(tri.exp_c == Rat(3));
        CHECK(tri.exp_b > Rat(1));
        // triangle inequalities
        CHECK(tri.exp_a < tri.exp_b * tri.exp_c);
        CHECK(tri.exp_b < tri.exp_a * tri.exp_c);
        CHECK(tri.exp_c < tri.exp_a * tri.exp_b);
        // the median identities, exactly
        const RatLength b(tri.exp_b), c(tri.exp_c);
        CHECK(Rat(2) * tri.cosh_median * half_a.cosh() == b.cosh() + c.cosh());
        CHECK(tri.cosh_median.squared() - tri.sinh_median.squared() == Rat(1));
        CHECK(tri.exp_median() > Rat(1));
        CHECK(f.curve().contains(tri.source));
    }
}

TEST_CASE("rejection paths: points giving invalid side data resolve to empty") {
    const MedianFamily f(Rat(2), Rat(3));
    CHECK_FALSE(f.triangle_from_point(f.point_p()));                 // x = 0
    CHECK_FALSE(f.triangle_from_point(RatPoint::inf()));
    // scan small multiples: anything that returns is valid, anything rejected
    // violates a documented constraint (v <= 1 or a triangle inequality)
    const RatPoint P = f.point_p();
    RatPoint fwd = RatPoint::inf();
    int rejected = 0, accepted = 0;
    for (long k = 1; k <= 8; ++k) {
        fwd = f.curve().add(fwd, P);
        for (const RatPoint& p : {fwd, f.curve().neg(fwd)}) {
            if (p.infinity || p.x.is_zero()) continue;
            const auto [v, t] = f.inverse(p);
            const bool valid_sides = v > Rat(1) && Rat(4) < v * Rat(3) && v < Rat(12) &&
                                     Rat(3) < Rat(4) * v;
            const auto tri = f.triangle_from_point(p);
            CHECK(tri.has_value() == valid_sides);
            (tri ? accepted : rejected) += 1;
        }
    }
    CHECK(accepted > 0);
    CHECK(rejected > 0);
}
