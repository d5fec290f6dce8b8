#include "hypheron/angle_family.hpp"

#include <algorithm>
#include <map>

namespace hypheron {

namespace {

RatCurve make_curve(const Rat& n, const Rat& u) {
    return RatCurve::from_roots(Rat(0), n, n * (u * u + Rat(1)));
}

} // namespace

AngleFamily::AngleFamily(Rat m, Rat u)
    : m_(std::move(m)), u_(std::move(u)),
      n_(m_ * (m_ * m_ + Rat(1)) * (Rat(2) * u_ - m_ * (u_ * u_ - Rat(1)))),
      curve_(n_.is_zero() || u_.is_zero()
                 ? throw SingularFamily("angle family needs n != 0 and u != 0")
                 : make_curve(n_, u_)) {}

Rat AngleFamily::discriminant_closed_form() const {
    return Rat(16) * pow_int(u_, 4) * (u_ * u_ + Rat(1)).squared() * pow_int(n_, 6);
}

Rat AngleFamily::quartic_w2(const Rat& t) const {
    const Rat& m = m_;
    const Rat& u = u_;
    const Rat A = m * u * u - m - Rat(2) * u;
    const Rat bracket = A * t * t + (Rat(-4) * m * u - Rat(2) * u * u + Rat(2)) * t - A;
    return Rat(4) * m * A * (m * t * t - Rat(2) * t - m) * bracket;
}

bool AngleFamily::condition_A(const Rat& t) const {
    if (!admissible_parameters()) return false;
    return t.sign() > 0 && t < (Rat(1) - m_ * u_) / (m_ + u_);
}

RatPoint AngleFamily::forward(const Rat& t, const Rat& w) const {
    if (t.is_zero()) throw MapUndefined("angle forward map undefined at t = 0");
    if (w * w != quartic_w2(t)) throw NotOnQuartic("w^2 != quartic(t)");
    const Rat& m = m_;
    const Rat& u = u_;
    const Rat C = Rat(2) * u - m * (u * u - Rat(1));
    const Rat mu1 = m * u - Rat(1);
    const Rat t2 = t * t;

    const Rat x = (C / (Rat(4) * t2)) *
                  (Rat(-4) * mu1 * (m + u) * m * t +
                   Rat(2) * (m * m * u * u + m * m - Rat(2) * m * u + Rat(2)) * m * t2 +
                   Rat(2) * C * m * m + m * w);

    const Rat y = -(C / (Rat(4) * t2 * t)) *
                  (Rat(2) * C * mu1 * (m + u) * m * m * t * (t2 - Rat(3)) +
                   Rat(2) * (m * m * u * u - m * m - Rat(6) * m * u - Rat(2) * u * u + Rat(2)) *
                       C * m * m * t2 +
                   Rat(2) * C * C * m * m * m - mu1 * (m + u) * m * t * w + C * m * m * w);

    RatPoint p{x, y};
    if (!curve_.contains(p)) throw NotOnQuartic("forward image not on curve");
    return p;
}

std::pair<Rat, Rat> AngleFamily::inverse(const RatPoint& p) const {
    if (p.infinity) throw ExcludedLine("inverse map undefined at infinity");
    const Rat& m = m_;
    const Rat& u = u_;
    const Rat& x = p.x;
    const Rat& y = p.y;
    const Rat C = Rat(2) * u - m * (u * u - Rat(1));
    const Rat den = y + (m + u) * (Rat(1) - m * u) * (x - n_);
    if (den.is_zero())
        throw ExcludedLine("point on the line y + (m+u)(1-mu)(x-n) = 0");

    const Rat t = -m * C * (x - (m + u).squared() * (m * m + Rat(1))) / den;

    const Rat u2 = u * u;
    const Rat m2 = m * m;
    const Rat big =
        x * x * x - Rat(3) * (m2 + Rat(1)) * (u + m).squared() * x * x +
        m * (m2 + Rat(1)).squared() * C *
            (m2 * pow_int(u, 4) + Rat(2) * pow_int(u, 4) + Rat(2) * m * u * u2 +
             Rat(2) * m2 * u2 + Rat(4) * u2 + Rat(6) * m * u + Rat(3) * m2) * x -
        m2 * pow_int(m2 + Rat(1), 3) * (u + m).squared() * (u2 + Rat(1)) * C * C +
        Rat(2) * (m2 + Rat(1)).squared() * u2 * (u + m) * (m * u - Rat(1)) * y;
    const Rat w = Rat(2) * m * C * big / den.squared();
    return {t, w};
}

Rat AngleFamily::special_t() const {
    const Rat& m = m_;
    const Rat& u = u_;
    const Rat den = pow_int(m, 4) * pow_int(u, 4) - pow_int(m, 4) * u * u -
                    Rat(4) * pow_int(m, 3) * pow_int(u, 3) + pow_int(m, 4) +
                    Rat(4) * pow_int(m, 3) * u + Rat(6) * m * m * u * u + u * u;
    if (den.is_zero()) throw DegenerateDenominator("special-t denominator vanishes");
    return Rat(2) * m * (m + u) * (Rat(1) - m * u) * (Rat(2) * u - m * (u * u - Rat(1))) / den;
}

RatPoint AngleFamily::point_p() const {
    const Rat m2p1 = m_ * m_ + Rat(1);
    const Rat s = m_ + u_;
    return {m2p1 * s.squared(), u_ * u_ * m2p1.squared() * s * (m_ * u_ - Rat(1))};
}

std::vector<RatPoint> AngleFamily::torsion_points() const {
    std::vector<RatPoint> pts{{Rat(0), Rat(0)}, {n_, Rat(0)}, {n_ * (u_ * u_ + Rat(1)), Rat(0)}};
    std::sort(pts.begin(), pts.end(), point_less);
    return pts;
}

std::optional<HyperbolicTriangle> AngleFamily::triangle_from_point(const RatPoint& p) const {
    if (p.infinity || p.y.is_zero()) return std::nullopt;   // identity / two-torsion
    if (!curve_.contains(p)) throw std::invalid_argument("point not on the family curve");
    if (!admissible_parameters()) return std::nullopt;

    Rat t, w;
    try {
        std::tie(t, w) = inverse(p);
    } catch (const ExcludedLine&) {
        // Of the three points on the excluded line only P(m,u) has a quartic
        // preimage, through the special-t closed form.
        if (!(p == point_p())) return std::nullopt;
        try {
            t = special_t();
        } catch (const DegenerateDenominator&) {
            return std::nullopt;
        }
        const auto wsq = rat_sqrt(quartic_w2(t));
        if (!wsq || t.is_zero()) return std::nullopt;
        w = *wsq;
    }
    if (t.is_zero() || !condition_A(t)) return std::nullopt;

    HyperbolicTriangle tri;
    tri.m = m_;
    tri.t_alpha = t;
    tri.t_beta = u_;
    try {
        tri.t_gamma = gauss_bonnet_gamma(m_, t, u_);
    } catch (const DegenerateAngle&) {
        return std::nullopt;
    }
    if (tri.t_gamma.sign() <= 0) return std::nullopt;

    const RatAngle alpha(t), beta(u_), gamma(tri.t_gamma);
    tri.cosh_a = cosh_from_angles(alpha, beta, gamma);
    tri.cosh_b = cosh_from_angles(beta, alpha, gamma);
    tri.cosh_c = cosh_from_angles(gamma, alpha, beta);
    if (!(tri.cosh_a > Rat(1) && tri.cosh_b > Rat(1) && tri.cosh_c > Rat(1))) return std::nullopt;

    const Rat d1 = abs(w) / ((m_ * m_ + Rat(1)) * (u_ * u_ + Rat(1)) * (t * t + Rat(1)));
    if (d1.is_zero()) return std::nullopt;
    tri.delta1 = d1;
    tri.sinh_a = d1 / (beta.sin() * gamma.sin());
    tri.sinh_b = d1 / (alpha.sin() * gamma.sin());
    tri.sinh_c = d1 / (alpha.sin() * beta.sin());

    if (!verify_triangle(tri).valid()) return std::nullopt;   // unreachable for on-curve input
    return tri;
}

std::vector<HeronCertificateData> AngleFamily::enumerate_heron(long k_max, long max_count) const {
    std::vector<HeronCertificateData> out;
    if (!admissible_parameters() || k_max < 1) return out;

    const RatPoint P = point_p();
    const auto torsion = torsion_points();
    std::map<Rat, size_t> seen;   // t -> index in out

    RatPoint fwd = RatPoint::inf();   // k P for k = 1, 2, ...
    for (long k = 1; k <= k_max; ++k) {
        fwd = curve_.add(fwd, P);
        for (long sign : {+1L, -1L}) {
            const RatPoint base = sign > 0 ? fwd : curve_.neg(fwd);
            for (int ti = 0; ti <= static_cast<int>(torsion.size()); ++ti) {
                const RatPoint q =
                    ti == 0 ? base : curve_.add(base, torsion[static_cast<size_t>(ti - 1)]);
                auto tri = triangle_from_point(q);
                if (!tri) continue;
                if (seen.contains(tri->t_alpha)) continue;
                seen[tri->t_alpha] = out.size();
                out.push_back({std::move(*tri), q, sign * k, ti});
                if (max_count > 0 && static_cast<long>(out.size()) >= max_count) {
                    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
                        const mpz_class ha = rat_height(a.triangle.t_alpha);
                        const mpz_class hb = rat_height(b.triangle.t_alpha);
                        if (ha != hb) return ha < hb;
                        return a.triangle.t_alpha < b.triangle.t_alpha;
                    });
                    return out;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const mpz_class ha = rat_height(a.triangle.t_alpha);
        const mpz_class hb = rat_height(b.triangle.t_alpha);
        if (ha != hb) return ha < hb;
        return a.triangle.t_alpha < b.triangle.t_alpha;
    });
    return out;
}

GaussPoint point_q_u1(const Rat& m) {
    const Rat x = Rat(2) * m * (m + Rat(1)).squared();
    const Rat y_im = Rat(4) * m * m * (m * m - Rat(1));
    return {GaussRat(x), GaussRat(Rat(0), y_im)};
}

} // namespace hypheron
