#include "hypheron/equilateral.hpp"

#include "hypheron/search.hpp"

#include <algorithm>

namespace hypheron {

namespace {

RatCurve make_case_curve(EquilateralKind kind) {
    if (kind == EquilateralKind::Heron) return {Rat(1), Rat(1), Rat(0)};
    return {Rat(10), Rat(9), Rat(0)};
}

} // namespace

EquilateralCase::EquilateralCase(EquilateralKind kind)
    : kind_(kind), curve_(make_case_curve(kind)) {}

TorsionCheck EquilateralCase::verify_torsion() const {
    TorsionCheck out;
    if (kind_ == EquilateralKind::Heron) {
        const RatPoint origin{Rat(0), Rat(0)};
        const auto two = two_torsion(curve_);
        out.ok = curve_.contains(origin) && curve_.torsion_order(origin, kTorsionBoundQ) == 2 &&
                 two.size() == 1 && two[0] == origin;
        out.points = {origin};
        out.detail = "only nontrivial torsion point is (0,0), of order 2";
        return out;
    }
    const RatPoint g4{Rat(-3), Rat(6)};
    const RatPoint g2{Rat(-1), Rat(0)};
    out.ok = curve_.torsion_order(g4, kTorsionBoundQ) == 4 &&
             curve_.torsion_order(g2, kTorsionBoundQ) == 2 &&
             curve_.dbl(g4) == RatPoint{Rat(0), Rat(0)};
    for (long a = 0; a < 4; ++a) {
        for (long b = 0; b < 2; ++b) {
            const RatPoint p = curve_.add(curve_.mul(a, g4), curve_.mul(b, g2));
            if (!p.infinity) out.points.push_back(p);
        }
    }
    std::sort(out.points.begin(), out.points.end(), point_less);
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    out.ok = out.ok && out.points.size() == 7;   // 8 group elements including infinity
    out.detail = "<(-3,6),(-1,0)> has 8 elements, isomorphic to Z/4 x Z/2";
    return out;
}

std::optional<std::pair<Rat, Rat>> EquilateralCase::interpret(const RatPoint& p) const {
    if (p.infinity) return std::nullopt;
    if (kind_ == EquilateralKind::Heron) {
        const Rat xp1 = p.x + Rat(1);
        if (xp1.is_zero()) return std::nullopt;
        return std::pair{(p.x - Rat(1)) / xp1, Rat(4) * p.y / xp1.squared()};
    }
    if (p.x.is_zero()) return std::nullopt;
    const Rat s = (Rat(9) - p.x * p.x) / (Rat(8) * p.x);
    const Rat pp = p.y / (Rat(4) * p.x);
    return std::pair{pp, s};
}

std::optional<Rejection> EquilateralCase::interpret_and_reject(const RatPoint& p) const {
    if (p.infinity) return Rejection{"point at infinity", "no affine interpretation"};
    if (kind_ == EquilateralKind::Heron) {
        if (p.y.is_zero())
            return Rejection{"v = 0", "sin(alpha) vanishes: degenerate, not an actual triangle"};
        return std::nullopt;
    }
    const char* p_meaning = kind_ == EquilateralKind::MedianRationalSide
                                ? "p = cosh(a/2)"
                                : "p = sin(alpha/2)";
    if (p.y.is_zero())
        return Rejection{"p = 0", std::string(p_meaning) + " = 0: impossible for a triangle"};
    if (p.x == Rat(3) || p.x == Rat(-3))
        return Rejection{"s = 0, hence t = 0", "sinh of the median vanishes: zero-length median"};
    return std::nullopt;
}

ScanReport EquilateralCase::nonexistence_scan(const mpz_class& height_bound) const {
    ScanReport report;
    report.height_bound = height_bound;
    report.found = naive_search(curve_, height_bound);
    const auto torsion = verify_torsion().points;
    report.only_known_torsion =
        std::all_of(report.found.begin(), report.found.end(), [&](const RatPoint& p) {
            return std::find(torsion.begin(), torsion.end(), p) != torsion.end();
        });
    return report;
}

} // namespace hypheron
