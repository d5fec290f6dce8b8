#include "hypheron/side_family.hpp"

#include "hypheron/search.hpp"

#include <algorithm>

namespace hypheron {

namespace {

Rat checked_half_diff(const Rat& q) {
    if (q.is_zero() || q * q == Rat(1))
        throw SingularFamily("side family needs v, w outside {0, 1, -1}");
    return q - q.inverse();
}

RatCurve make_side_curve(const Rat& rv, const Rat& rw) {
    if (rv * rv == rw * rw)
        throw SingularFamily("side family needs (v-v^-1)^2 != (w-w^-1)^2");
    return RatCurve::from_roots(Rat(0), rv * rv, rw * rw);
}

} // namespace

SideFamily::SideFamily(Rat v, Rat w)
    : v_(std::move(v)), w_(std::move(w)), rv_(checked_half_diff(v_)), rw_(checked_half_diff(w_)),
      curve_(make_side_curve(rv_, rw_)) {}

Rat SideFamily::discriminant_closed_form() const {
    const Rat cross1 = v_.inverse() * w_ - v_ * w_.inverse();
    const Rat cross2 = v_ * w_ - (v_ * w_).inverse();
    return Rat(16) * pow_int(rv_, 4) * pow_int(rw_, 4) * cross1.squared() * cross2.squared();
}

bool SideFamily::condition_B(const Rat& u) const {
    if (!(v_ > Rat(1) && w_ > Rat(1))) return false;
    const Rat lo = std::max(v_ / w_, w_ / v_);
    return lo < u && u < v_ * w_;
}

RatPoint SideFamily::forward(const Rat& u, const Rat& d2) const {
    const Rat& v = v_;
    const Rat& w = w_;
    if (u == v * w) throw MapUndefined("side forward map undefined at u = vw");
    const Rat quartic = (u * v - w) * (u * w - v) * (v * w - u) * (u * v * w - Rat(1));
    if (Rat(4) * u * u * v * v * w * w * d2 * d2 != quartic)
        throw NotOnQuartic("d2 does not satisfy the side quartic");
    const Rat v2m = v * v - Rat(1);
    const Rat w2m = w * w - Rat(1);
    const Rat x = v2m * w2m * (u * v * w - Rat(1)) / (v * w * (v * w - u));
    const Rat y = Rat(2) * u * v2m * w2m * (v * v * w * w - Rat(1)) * d2 / (v * w * (u - v * w).squared());
    RatPoint p{x, y};
    if (!curve_.contains(p)) throw NotOnQuartic("side forward image not on curve");
    return p;
}

std::pair<Rat, Rat> SideFamily::inverse(const RatPoint& p) const {
    if (p.infinity) throw MapUndefined("side inverse map undefined at infinity");
    const Rat B = (v_ * v_ - Rat(1)) * (w_ * w_ - Rat(1));
    const Rat d1 = p.x + B;
    const Rat d2den = v_ * v_ * w_ * w_ * p.x + B;
    if (d1.is_zero() || d2den.is_zero())
        throw MapUndefined("side inverse map denominator vanishes");
    const Rat u = d2den / (v_ * w_ * d1);
    const Rat d2 = B * (v_ * v_ * w_ * w_ - Rat(1)) * p.y / (Rat(2) * d1 * d2den);
    return {u, d2};
}

SideFamily::SpecialPoints SideFamily::special_points() const {
    const Rat vw = v_ * w_;
    SpecialPoints sp{
        {GaussRat(-vw * rv_ * rw_), GaussRat(Rat(0), vw * rv_ * rw_ * (vw - vw.inverse()))},
        {GaussRat(rv_ * rw_),
         GaussRat(Rat(0), rv_ * rw_ * (v_.inverse() - w_.inverse()) * (vw + Rat(1)))},
        {GaussRat(rv_ * rv_), GaussRat(Rat(0))},
    };
    return sp;
}

std::optional<SideCompletion> SideFamily::triangle_from_point(const RatPoint& p) const {
    if (p.infinity) return std::nullopt;
    if (!curve_.contains(p)) throw std::invalid_argument("point not on the family curve");

    Rat u, d2;
    try {
        std::tie(u, d2) = inverse(p);
    } catch (const MapUndefined&) {
        return std::nullopt;
    }
    if (!condition_B(u)) return std::nullopt;
    if (d2.is_zero()) return std::nullopt;   // degenerate: some angle sine vanishes

    const RatLength la(u), lb(v_), lc(w_);
    const Rat sinh_a = la.sinh(), sinh_b = lb.sinh(), sinh_c = lc.sinh();
    const Rat cosh_a = la.cosh(), cosh_b = lb.cosh(), cosh_c = lc.cosh();
    const Rat delta2 = abs(d2);

    // law of cosines for the side lengths gives the cosines; Delta_2 the sines
    const Rat cos_alpha = (cosh_b * cosh_c - cosh_a) / (sinh_b * sinh_c);
    const Rat cos_beta = (cosh_a * cosh_c - cosh_b) / (sinh_a * sinh_c);
    const Rat cos_gamma = (cosh_a * cosh_b - cosh_c) / (sinh_a * sinh_b);
    const Rat sin_alpha = delta2 / (sinh_b * sinh_c);
    const Rat sin_beta = delta2 / (sinh_a * sinh_c);
    const Rat sin_gamma = delta2 / (sinh_a * sinh_b);
    if (sin_alpha.sign() <= 0 || sin_beta.sign() <= 0 || sin_gamma.sign() <= 0)
        return std::nullopt;

    HyperbolicTriangle tri;
    try {
        tri.t_alpha = angle_param_from_unit({cos_alpha, sin_alpha});
        tri.t_beta = angle_param_from_unit({cos_beta, sin_beta});
        tri.t_gamma = angle_param_from_unit({cos_gamma, sin_gamma});
        const GaussRat e_area =
            -(GaussRat(cos_alpha, sin_alpha) * GaussRat(cos_beta, sin_beta) *
              GaussRat(cos_gamma, sin_gamma)).conj();
        tri.m = angle_param_from_unit(e_area);
    } catch (const DegenerateAngle&) {
        return std::nullopt;
    }
    if (tri.t_alpha.sign() <= 0 || tri.t_beta.sign() <= 0 || tri.t_gamma.sign() <= 0 ||
        tri.m.sign() <= 0)
        return std::nullopt;
    tri.cosh_a = cosh_a;
    tri.cosh_b = cosh_b;
    tri.cosh_c = cosh_c;
    tri.sinh_a = sinh_a;
    tri.sinh_b = sinh_b;
    tri.sinh_c = sinh_c;
    tri.delta1 = sinh_a * sin_beta * sin_gamma;

    const IdentityReport report = verify_triangle(tri);
    if (!report.valid() || !report.heron) return std::nullopt;
    return SideCompletion{std::move(tri), u, p};
}

std::vector<SideCompletion> SideFamily::search_completions(const mpz_class& height_bound) const {
    std::vector<SideCompletion> out;
    if (!(v_ > Rat(1) && w_ > Rat(1))) return out;
    for (const RatPoint& p : naive_search(curve_, height_bound)) {
        auto c = triangle_from_point(p);
        if (c) out.push_back(std::move(*c));
    }
    // a completion is its third side: P and -P carry the same triangle
    std::sort(out.begin(), out.end(), [](const SideCompletion& a, const SideCompletion& b) {
        const mpz_class ha = rat_height(a.u), hb = rat_height(b.u);
        if (ha != hb) return ha < hb;
        if (a.u != b.u) return a.u < b.u;
        return point_less(a.source, b.source);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SideCompletion& a, const SideCompletion& b) {
                              return a.u == b.u;
                          }),
              out.end());
    return out;
}

} // namespace hypheron
