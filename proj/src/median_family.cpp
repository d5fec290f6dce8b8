#include "hypheron/median_family.hpp"

#include <algorithm>

namespace hypheron {

namespace {

RatCurve make_median_curve(const Rat& u, const Rat& w) {
    if (u.is_zero() || w.is_zero()) throw SingularFamily("median family needs u, w != 0");
    const Rat u2 = u * u, w2 = w * w;
    const Rat u2p1 = u2 + Rat(1);
    const Rat a2 = u2 * w2 * w2 + Rat(2) * (Rat(4) * u2 * u2 + Rat(7) * u2 + Rat(4)) * w2 + u2;
    const Rat a4 = Rat(8) * u2p1.squared() * w2 * (u2 * w2 * w2 + Rat(2) * u2p1.squared() * w2 + u2);
    const Rat a6 = Rat(16) * u2 * w2 * w2 * pow_int(u2p1, 4) * (w2 + Rat(1)).squared();
    try {
        return RatCurve(a2, a4, a6);
    } catch (const SingularCurve&) {
        throw SingularFamily("median family discriminant vanishes");
    }
}

} // namespace

MedianFamily::MedianFamily(Rat u, Rat w)
    : u_(std::move(u)), w_(std::move(w)), curve_(make_median_curve(u_, w_)) {}

Rat MedianFamily::discriminant_closed_form() const {
    const Rat& u = u_;
    const Rat& w = w_;
    const Rat head = pow_int(Rat(2), 12) * pow_int(u, 4) * pow_int(w, 8) *
                     pow_int(u * u + Rat(1), 4);
    const Rat base = u * w * w + u;
    const Rat p = Rat(2) * (u * u + u + Rat(1)) * w;
    const Rat q = Rat(2) * (u * u - u + Rat(1)) * w;
    return head * (base - p) * (base - q) * (base + p) * (base + q);
}

Rat median_quartic(const Rat& u, const Rat& v, const Rat& w) {
    const Rat s = v * v * w + w + v * w * w + v;
    return s * s * u * u - Rat(4) * v * v * w * w * (u * u + Rat(1)).squared();
}

Rat MedianFamily::quartic_t2(const Rat& v) const { return median_quartic(u_, v, w_); }

RatPoint MedianFamily::forward(const Rat& v, const Rat& t) const {
    if (t * t != quartic_t2(v)) throw NotOnQuartic("t^2 != median quartic(v)");
    const Rat& u = u_;
    const Rat& w = w_;
    const Rat u2 = u * u, w2 = w * w;
    const Rat x = Rat(2) * w *
                  (u2 * w * v * v + u2 * (w2 + Rat(1)) * v - Rat(2) * u2 * u2 * w -
                   Rat(3) * u2 * w + u * t - Rat(2) * w);
    const Rat y = Rat(2) * u * w *
                  (Rat(2) * u2 * w2 * v * v * v + Rat(3) * w * u2 * (w2 + Rat(1)) * v * v +
                   (Rat(-4) * u2 * u2 * w2 + u2 * w2 * w2 - Rat(4) * u2 * w2 +
                    Rat(2) * u * w * t + u2 - Rat(4) * w2) * v +
                   u * (w2 + Rat(1)) * (u * w + t));
    RatPoint p{x, y};
    if (!curve_.contains(p)) throw NotOnQuartic("median forward image not on curve");
    return p;
}

std::pair<Rat, Rat> MedianFamily::inverse(const RatPoint& p) const {
    if (p.infinity || p.x.is_zero())
        throw MapUndefined("median inverse map undefined at x = 0");
    const Rat& u = u_;
    const Rat& w = w_;
    const Rat& x = p.x;
    const Rat& y = p.y;
    const Rat w2 = w * w;
    const Rat u2p1sq = (u * u + Rat(1)).squared();
    const Rat v = -(Rat(4) * u * w2 * (w2 + Rat(1)) * u2p1sq + u * (w2 + Rat(1)) * x - y) /
                  (Rat(2) * x * u * w);
    const Rat t = -(-x * x * x +
                    Rat(8) * w2 * u2p1sq * (Rat(2) * w2 * u2p1sq + (w2 * w2 + Rat(1)) * u * u) * x -
                    Rat(8) * u * w2 * (w2 + Rat(1)) * u2p1sq * y +
                    Rat(32) * u * u * w2 * w2 * (w2 + Rat(1)).squared() * u2p1sq.squared()) /
                  (Rat(4) * x * x * u * w);
    return {v, t};
}

RatPoint MedianFamily::point_p() const {
    return {Rat(0),
            Rat(4) * u_ * (u_ * u_ + Rat(1)).squared() * w_ * w_ * (w_ * w_ + Rat(1))};
}

std::optional<MedianTriangle> MedianFamily::triangle_from_point(const RatPoint& p) const {
    if (p.infinity || p.x.is_zero()) return std::nullopt;
    if (!curve_.contains(p)) throw std::invalid_argument("point not on the family curve");
    if (degenerate_side()) return std::nullopt;

    Rat v, t;
    std::tie(v, t) = inverse(p);

    const Rat ea = u_ * u_;   // e^a
    // positivity and the three triangle inequalities on (a, b, c)
    if (!(ea > Rat(1) && v > Rat(1) && w_ > Rat(1))) return std::nullopt;
    if (!(ea < v * w_ && v < ea * w_ && w_ < ea * v)) return std::nullopt;

    const RatLength la(ea), lb(v), lc(w_), lha(u_);
    const Rat cosh_m = (lb.cosh() + lc.cosh()) / (Rat(2) * lha.cosh());
    const Rat sinh_m = abs(t) / (Rat(2) * v * w_ * (u_ * u_ + Rat(1)));
    if (cosh_m * cosh_m - sinh_m * sinh_m != Rat(1)) return std::nullopt;   // unreachable
    if (!(cosh_m + sinh_m > Rat(1))) return std::nullopt;

    MedianTriangle out;
    out.exp_a = ea;
    out.exp_b = v;
    out.exp_c = w_;
    out.cosh_median = cosh_m;
    out.sinh_median = sinh_m;
    out.source = p;

    // the full triangle is Heron exactly when delta2 is a square
    if (rat_sqrt(delta2_squared(la, lb, lc))) {
        const Rat sinh_a = la.sinh(), sinh_b = lb.sinh(), sinh_c = lc.sinh();
        const Rat d2 = *rat_sqrt(delta2_squared(la, lb, lc));
        HyperbolicTriangle tri;
        const Rat cos_alpha = (lb.cosh() * lc.cosh() - la.cosh()) / (sinh_b * sinh_c);
        const Rat cos_beta = (la.cosh() * lc.cosh() - lb.cosh()) / (sinh_a * sinh_c);
        const Rat cos_gamma = (la.cosh() * lb.cosh() - lc.cosh()) / (sinh_a * sinh_b);
        const Rat sin_alpha = d2 / (sinh_b * sinh_c);
        const Rat sin_beta = d2 / (sinh_a * sinh_c);
        const Rat sin_gamma = d2 / (sinh_a * sinh_b);
        try {
            tri.t_alpha = angle_param_from_unit({cos_alpha, sin_alpha});
            tri.t_beta = angle_param_from_unit({cos_beta, sin_beta});
            tri.t_gamma = angle_param_from_unit({cos_gamma, sin_gamma});
            const GaussRat e_area =
                -(GaussRat(cos_alpha, sin_alpha) * GaussRat(cos_beta, sin_beta) *
                  GaussRat(cos_gamma, sin_gamma)).conj();
            tri.m = angle_param_from_unit(e_area);
            tri.cosh_a = la.cosh();
            tri.cosh_b = lb.cosh();
            tri.cosh_c = lc.cosh();
            tri.sinh_a = sinh_a;
            tri.sinh_b = sinh_b;
            tri.sinh_c = sinh_c;
            tri.delta1 = sinh_a * sin_beta * sin_gamma;
            if (verify_triangle(tri).valid()) out.full = std::move(tri);
        } catch (const DegenerateAngle&) {
        }
    }
    return out;
}

std::vector<MedianTriangle> MedianFamily::enumerate(long k_max, long max_count) const {
    std::vector<MedianTriangle> out;
    if (k_max < 1 || degenerate_side()) return out;
    const RatPoint P = point_p();
    RatPoint fwd = RatPoint::inf();
    std::vector<Rat> seen;
    for (long k = 1; k <= k_max; ++k) {
        fwd = curve_.add(fwd, P);
        for (long sign : {+1L, -1L}) {
            const RatPoint q = sign > 0 ? fwd : curve_.neg(fwd);
            auto tri = triangle_from_point(q);
            if (!tri) continue;
            if (std::find(seen.begin(), seen.end(), tri->exp_b) != seen.end()) continue;
            seen.push_back(tri->exp_b);
            tri->k = sign * k;
            out.push_back(std::move(*tri));
            if (max_count > 0 && static_cast<long>(out.size()) >= max_count) {
                k = k_max;
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const MedianTriangle& a, const MedianTriangle& b) {
        const mpz_class ha = rat_height(a.exp_b), hb = rat_height(b.exp_b);
        if (ha != hb) return ha < hb;
        return a.exp_b < b.exp_b;
    });
    return out;
}

} // namespace hypheron
