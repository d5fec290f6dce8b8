#include "hypheron/hyperbolic.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace hypheron;

namespace {

// the fixed identity-oracle chain: (m, u, t) = (1/2, 1, 1/4)
struct Fixture {
    Rat m{1, 2}, t_alpha{1, 4}, t_beta{1};
    Rat t_gamma = gauss_bonnet_gamma(m, t_alpha, t_beta);
};

HyperbolicTriangle fixture_triangle() {
    Fixture f;
    HyperbolicTriangle t;
    t.m = f.m;
    t.t_alpha = f.t_alpha;
    t.t_beta = f.t_beta;
    t.t_gamma = f.t_gamma;
    const RatAngle alpha(f.t_alpha), beta(f.t_beta), gamma(f.t_gamma);
    t.cosh_a = cosh_from_angles(alpha, beta, gamma);
    t.cosh_b = cosh_from_angles(beta, alpha, gamma);
    t.cosh_c = cosh_from_angles(gamma, alpha, beta);
    return t;
}

} // namespace

TEST_CASE("unit circle identities hold exactly for random parameters") {
    testutil::RatGen gen(111);
    for (int i = 0; i < 300; ++i) {
        const RatAngle a(gen.next(200, 99, false));
        CHECK(a.cos() * a.cos() + a.sin() * a.sin() == Rat(1));
        const Rat q = gen.positive(200, 99) + Rat(1);   // q > 1
        const RatLength l(q);
        CHECK(l.cosh() * l.cosh() - l.sinh() * l.sinh() == Rat(1));
        CHECK(l.cosh() + l.sinh() == q);
    }
}

TEST_CASE("gauss_bonnet_gamma fixture and properties") {
    Fixture f;
    CHECK(f.t_gamma == Rat(1, 13));

    // composing back: e^{iA} e^{ia} e^{ib} e^{ig} = -1 exactly
    const GaussRat closure = RatAngle(f.m).unit() * RatAngle(f.t_alpha).unit() *
                             RatAngle(f.t_beta).unit() * RatAngle(f.t_gamma).unit();
    CHECK(closure == GaussRat(Rat(-1), Rat(0)));

    // symmetric arrangement: swapping beta and gamma recovers t = 1
    const Rat sym = gauss_bonnet_gamma(Rat(1, 2), Rat(1, 4), Rat(1, 13));
    CHECK(sym == Rat(1));

    // A = alpha = pi/2: gamma = -beta, so the parameter comes back negated
    CHECK(gauss_bonnet_gamma(Rat(1), Rat(1), Rat(1, 3)) == Rat(-1, 3));

    // A + alpha + beta = pi leaves gamma = 0 (not an exception, parameter is 0)
    CHECK(gauss_bonnet_gamma(Rat(1, 2), Rat(1, 3), Rat(1)) == Rat(0));

    // three quarter-turns: gamma = -pi/2
    CHECK(gauss_bonnet_gamma(Rat(1), Rat(1), Rat(1)) == Rat(-1));
}

TEST_CASE("gauss_bonnet_gamma throws exactly at gamma = pi") {
    // 2atan(1/2) + 2atan(1/3) = pi/2 and 2atan(-1) = -pi/2: the unit product is 1
    CHECK_THROWS_AS(gauss_bonnet_gamma(Rat(1, 2), Rat(1, 3), Rat(-1)), DegenerateAngle);
}

TEST_CASE("cosh_from_angles fixture values") {
    Fixture f;
    const RatAngle alpha(f.t_alpha), beta(f.t_beta), gamma(f.t_gamma);
    CHECK(cosh_from_angles(alpha, beta, gamma) == Rat(75, 13));
    CHECK(cosh_from_angles(gamma, alpha, beta) == Rat(21, 10));
    CHECK(cosh_from_angles(beta, alpha, gamma) == Rat(315, 26));
    CHECK_THROWS_AS(cosh_from_angles(alpha, RatAngle(Rat(0)), gamma), DegenerateAngle);
}

TEST_CASE("delta1_squared fixture, degenerate and squared-law consistency") {
    Fixture f;
    const RatAngle alpha(f.t_alpha), beta(f.t_beta), gamma(f.t_gamma);
    CHECK(delta1_squared(alpha, beta, gamma) == Rat(5456, 7225));
    CHECK_FALSE(rat_sqrt(Rat(5456, 7225)));   // not Heron

    // flat triangle (area 0): alpha = pi - beta - gamma makes delta1 vanish
    // and the area-sine formula return exactly 0
    testutil::RatGen gen(222);
    for (int i = 0; i < 50; ++i) {
        const Rat tb = gen.positive(5, 9), tg = gen.positive(5, 9);
        Rat ta;
        try {
            ta = gauss_bonnet_gamma(Rat(0), tb, tg);
        } catch (const DegenerateAngle&) {
            continue;
        }
        if (ta.is_zero()) continue;
        CHECK(delta1_squared(RatAngle(ta), RatAngle(tb), RatAngle(tg)) == Rat(0));
        CHECK(sin_area_from_sides(RatAngle(ta), RatAngle(tb), RatAngle(tg)) == Rat(0));
    }
}

TEST_CASE("delta1_squared equals the squared law-of-cosines rearrangement, 500 random triples") {
    testutil::RatGen gen(333);
    for (int i = 0; i < 500; ++i) {
        const RatAngle a(gen.next(30, 15, false)), b(gen.next(30, 15, false)),
            g(gen.next(30, 15, false));
        if (b.sin().is_zero() || g.sin().is_zero()) continue;
        const Rat cosh_side = (a.cos() + b.cos() * g.cos()) / (b.sin() * g.sin());
        const Rat sinh_sq = cosh_side * cosh_side - Rat(1);
        CHECK(delta1_squared(a, b, g) == sinh_sq * b.sin().squared() * g.sin().squared());
    }
}

TEST_CASE("symmetric form: 2 delta1^2 as a sum of cosines (property only)") {
    testutil::RatGen gen(444);
    for (int i = 0; i < 100; ++i) {
        const RatAngle a(gen.next(20, 9, false)), b(gen.next(20, 9, false)),
            g(gen.next(20, 9, false));
        const GaussRat ua = a.unit(), ub = b.unit(), ug = g.unit();
        const Rat sum = (ua.conj() * ub * ug).re() + (ua * ub.conj() * ug).re() +
                        (ua * ub * ug.conj()).re() + (ua * ub * ug).re() +
                        (ua * ua).re() + (ub * ub).re() + (ug * ug).re() + Rat(1);
        CHECK(Rat(2) * delta1_squared(a, b, g) == sum);
    }
}

TEST_CASE("sin_area_from_sides fixture and symmetry") {
    Fixture f;
    const RatAngle alpha(f.t_alpha), beta(f.t_beta), gamma(f.t_gamma);
    CHECK(sin_area_from_sides(alpha, beta, gamma) == Rat(4, 5));
    CHECK(sin_area_from_sides(alpha, beta, gamma) == RatAngle(f.m).sin());
    // permutation invariance
    CHECK(sin_area_from_sides(gamma, alpha, beta) == Rat(4, 5));
    CHECK(sin_area_from_sides(beta, gamma, alpha) == Rat(4, 5));
}

TEST_CASE("delta2_squared values and sign behaviour") {
    CHECK(delta2_squared(RatLength(Rat(4)), RatLength(Rat(2)), RatLength(Rat(3))) ==
          Rat(575, 576));
    // u = vw collapses a factor
    CHECK(delta2_squared(RatLength(Rat(6)), RatLength(Rat(2)), RatLength(Rat(3))) == Rat(0));
    // violated triangle inequality gives a negative value, never a square
    const Rat neg = delta2_squared(RatLength(Rat(100)), RatLength(Rat(2)), RatLength(Rat(3)));
    CHECK(neg.sign() < 0);
    CHECK_FALSE(rat_sqrt(neg));
}

TEST_CASE("verify_triangle on the fixture: all laws hold, not Heron") {
    const HyperbolicTriangle t = fixture_triangle();
    const IdentityReport r = verify_triangle(t);
    CHECK(r.law_cos_a);
    CHECK(r.law_cos_b);
    CHECK(r.law_cos_c);
    CHECK(r.gauss_bonnet);
    CHECK(r.law_sines);
    CHECK(r.sinh_consistent);
    CHECK(r.valid());
    CHECK_FALSE(r.heron);
}

TEST_CASE("verify_triangle flags a tampered cosh") {
    HyperbolicTriangle t = fixture_triangle();
    t.cosh_a += Rat(1);
    const IdentityReport r = verify_triangle(t);
    CHECK_FALSE(r.law_cos_a);
    CHECK_FALSE(r.valid());
}

TEST_CASE("triangle JSON round-trip carries the exact values") {
    HyperbolicTriangle t = fixture_triangle();
    const auto j = t.to_json();
    CHECK(j["tAlpha"] == "1/4");
    CHECK(j["m"] == "1/2");
    CHECK_FALSE(j.contains("expA"));   // sinh irrational here
    CHECK(j["heron"] == false);
    const auto back = HyperbolicTriangle::from_json(j);
    REQUIRE(back);
    CHECK(*back == t);
}
