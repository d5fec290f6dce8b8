#include "hypheron/equilateral.hpp"

#include "hypheron/hyperbolic.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace hypheron;

TEST_CASE("the two reduced curves") {
    const EquilateralCase heron(EquilateralKind::Heron);
    CHECK(heron.curve().a2() == Rat(1));
    CHECK(heron.curve().a4() == Rat(1));
    CHECK(heron.curve().a6() == Rat(0));

    const EquilateralCase median(EquilateralKind::MedianRationalSide);
    CHECK(median.curve().a2() == Rat(10));
    CHECK(median.curve().a4() == Rat(9));
    CHECK(median.curve().a6() == Rat(0));

    CHECK(!heron.curve().discriminant().is_zero());
    CHECK(!median.curve().discriminant().is_zero());
}

TEST_CASE("torsion verification reproduces the claimed groups") {
    const auto hc = EquilateralCase(EquilateralKind::Heron).verify_torsion();
    CHECK(hc.ok);
    REQUIRE(hc.points.size() == 1);
    CHECK(hc.points[0] == RatPoint{Rat(0), Rat(0)});

    const EquilateralCase mc(EquilateralKind::MedianRationalSide);
    const auto tc = mc.verify_torsion();
    CHECK(tc.ok);
    CHECK(tc.points.size() == 7);
    // 2*(-3,6) = (0,0) and (-3,6)+(-1,0) is again of order 4
    CHECK(mc.curve().dbl({Rat(-3), Rat(6)}) == RatPoint{Rat(0), Rat(0)});
    const RatPoint s = mc.curve().add({Rat(-3), Rat(6)}, {Rat(-1), Rat(0)});
    CHECK((s == RatPoint{Rat(3), Rat(12)} || s == RatPoint{Rat(3), Rat(-12)}));
    CHECK(mc.curve().torsion_order(s, kTorsionBoundQ) == 4);
    const std::vector<RatPoint> expect = {
        {Rat(0), Rat(0)},  {Rat(-1), Rat(0)}, {Rat(-3), Rat(-6)}, {Rat(-3), Rat(6)},
        {Rat(3), Rat(-12)}, {Rat(3), Rat(12)}, {Rat(-9), Rat(0)},
    };
    for (const auto& p : expect)
        CHECK(std::find(tc.points.begin(), tc.points.end(), p) != tc.points.end());
}

TEST_CASE("interpretation maps each torsion point to a documented rejection") {
    const EquilateralCase mc(EquilateralKind::MedianRationalSide);
    auto rej = mc.interpret_and_reject({Rat(-1), Rat(0)});
    REQUIRE(rej);
    CHECK(rej->constraint == "p = 0");
    rej = mc.interpret_and_reject({Rat(3), Rat(12)});
    REQUIRE(rej);
    CHECK(rej->constraint == "s = 0, hence t = 0");
    rej = mc.interpret_and_reject({Rat(-3), Rat(6)});   // s = 0 at x = -3 as well
    REQUIRE(rej);
    CHECK(rej->constraint == "s = 0, hence t = 0");

    const EquilateralCase hc(EquilateralKind::Heron);
    rej = hc.interpret_and_reject({Rat(0), Rat(0)});
    REQUIRE(rej);
    CHECK(rej->constraint == "v = 0");

    // every verified torsion point on both curves is rejected
    for (const auto kind :
         {EquilateralKind::Heron, EquilateralKind::MedianRationalSide,
          EquilateralKind::MedianRationalAngle}) {
        const EquilateralCase ec(kind);
        for (const auto& p : ec.verify_torsion().points) CHECK(ec.interpret_and_reject(p));
    }
}

TEST_CASE("the interpretation changes of variables are exact on-curve") {
    // heron: v^2 - (-u^4 - 2u^2 + 3) = (16/(x+1)^4) (y^2 - x(x^2+x+1)) as an identity
    testutil::RatGen gen(107);
    for (int i = 0; i < 50; ++i) {
        const Rat x = gen.next(40, 9), y = gen.next(40, 9);
        if (x == Rat(-1) || x.is_zero()) continue;
        const Rat u = (x - Rat(1)) / (x + Rat(1));
        const Rat v = Rat(4) * y / (x + Rat(1)).squared();
        const Rat lhs = v * v - (-pow_int(u, 4) - Rat(2) * u * u + Rat(3));
        const Rat residual = y * y - (x * x * x + x * x + x);
        CHECK(lhs == Rat(16) / pow_int(x + Rat(1), 4) * residual);

        // median: s^2 - (4p^4 - 5p^2 + 1) vanishes together with y^2 - rhs(x)
        const Rat s = (Rat(9) - x * x) / (Rat(8) * x);
        const Rat p = y / (Rat(4) * x);
        const Rat lhs2 = s * s - (Rat(4) * pow_int(p, 4) - Rat(5) * p * p + Rat(1));
        const Rat e = y * y - (x * x * x + Rat(10) * x * x + Rat(9) * x);
        // identity: lhs2 = ((80x^2 - 8 rhs(x)) e - 4 e^2) / (256 x^4)  with rhs = y^2 - e
        const Rat rhs_val = y * y - e;
        CHECK(lhs2 == ((Rat(80) * x * x - Rat(8) * rhs_val) * e - Rat(4) * e * e) /
                          (Rat(256) * pow_int(x, 4)));
    }
    // and the inverse maps round-trip on the actual torsion points
    const EquilateralCase mc(EquilateralKind::MedianRationalSide);
    for (const auto& pt : mc.verify_torsion().points) {
        if (pt.x.is_zero()) continue;
        const auto interp = mc.interpret(pt);
        REQUIRE(interp);
        const auto [p, s] = *interp;
        CHECK(s * s == Rat(4) * pow_int(p, 4) - Rat(5) * p * p + Rat(1));
        // x = -4s + 8p^2 - 5, y = 4p(-4s + 8p^2 - 5)
        const Rat x_back = Rat(-4) * s + Rat(8) * p * p - Rat(5);
        CHECK(x_back == pt.x);
        CHECK(Rat(4) * p * x_back == pt.y);
    }
    const EquilateralCase hc(EquilateralKind::Heron);
    const auto interp = hc.interpret({Rat(0), Rat(0)});
    REQUIRE(interp);
    CHECK(interp->first == Rat(-1));    // u
    CHECK(interp->second == Rat(0));    // v
    CHECK(interp->second * interp->second ==
          -pow_int(interp->first, 4) - Rat(2) * interp->first.squared() + Rat(3));
}

TEST_CASE("delta1 factorization for equilateral triangles") {
    // delta1^2(a,a,a) = (2cos - 1)(cos + 1)^2, against the hypgeom evaluation
    testutil::RatGen gen(211);
    for (int i = 0; i < 100; ++i) {
        const RatAngle a(gen.next(30, 15, false));
        const Rat c = a.cos();
        CHECK(delta1_squared(a, a, a) == (Rat(2) * c - Rat(1)) * (c + Rat(1)).squared());
    }
}

TEST_CASE("bounded nonexistence scans at small height") {
    const EquilateralCase hc(EquilateralKind::Heron);
    const auto hr = hc.nonexistence_scan(500);
    CHECK(hr.only_known_torsion);
    CHECK(hr.found == std::vector<RatPoint>{{Rat(0), Rat(0)}});

    const EquilateralCase mc(EquilateralKind::MedianRationalAngle);
    const auto mr = mc.nonexistence_scan(500);
    CHECK(mr.only_known_torsion);
    CHECK(mr.found.size() == 7);

    // monotone in the bound
    const auto small = mc.nonexistence_scan(3);
    for (const auto& p : small.found)
        CHECK(std::find(mr.found.begin(), mr.found.end(), p) != mr.found.end());
}
