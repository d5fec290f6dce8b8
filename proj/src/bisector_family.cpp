#include "hypheron/bisector_family.hpp"

#include <algorithm>
#include <tuple>

namespace hypheron {

namespace {

// (2 n^3 u + 3 n^2 u^2 - 3 n^2 - 6 n u - u^2 + 1), recurring across the maps
Rat factor_l(const Rat& n, const Rat& u) {
    return Rat(2) * pow_int(n, 3) * u + Rat(3) * n * n * u * u - Rat(3) * n * n -
           Rat(6) * n * u - u * u + Rat(1);
}

// (n u^2 - 2 u - n)
Rat factor_k(const Rat& n, const Rat& u) { return n * u * u - Rat(2) * u - n; }

// (3 n^2 u^2 - u^2 + 2 n^3 u - 6 n u - 3 n^2 + 1)
Rat factor_s(const Rat& n, const Rat& u) {
    return Rat(3) * n * n * u * u - u * u + Rat(2) * pow_int(n, 3) * u - Rat(6) * n * u -
           Rat(3) * n * n + Rat(1);
}

// t^2 coefficient of the quartic
Rat t2_coefficient(const Rat& n, const Rat& u) {
    const Rat n2 = n * n, u2 = u * u;
    const Rat n3 = n2 * n, u3 = u2 * u;
    const Rat n4 = n2 * n2, u4 = u2 * u2;
    const Rat n5 = n4 * n, n6 = n4 * n2;
    return n6 * u4 + Rat(2) * n6 * u2 + Rat(8) * n5 * u3 + Rat(11) * n4 * u4 + n6 -
           Rat(8) * n5 * u - Rat(50) * n4 * u2 - Rat(64) * n3 * u3 - Rat(13) * n2 * u4 +
           Rat(11) * n4 + Rat(64) * n3 * u + Rat(86) * n2 * u2 + Rat(24) * n * u3 + u4 -
           Rat(13) * n2 - Rat(24) * n * u - Rat(6) * u2 + Rat(1);
}

struct CurveParts {
    Rat lin_root, quad_lin, quad_const;
    RatCurve curve;
};

CurveParts make_bisector_curve(const Rat& n, const Rat& u) {
    const Rat c = n * n + Rat(1);
    const Rat K = factor_k(n, u);
    const Rat S = factor_s(n, u);
    const Rat n2 = n * n, u2 = u * u;
    const Rat n3 = n2 * n, u3 = u2 * u;
    const Rat n4 = n2 * n2, u4 = u2 * u2;
    const Rat M = n4 * u4 - Rat(8) * n2 * u4 - u4 - Rat(16) * n3 * u3 + Rat(16) * n * u3 -
                  Rat(6) * n4 * u2 + Rat(32) * n2 * u2 - Rat(10) * u2 + Rat(16) * n3 * u -
                  Rat(16) * n * u + n4 - Rat(8) * n2 - Rat(1);
    const Rat lin_root = c.squared() * K.squared();
    const Rat quad_lin = c * M;
    const Rat quad_const = lin_root * S.squared();
    // (x - lin_root)(x^2 - quad_lin x - quad_const), expanded
    const Rat a2 = -(quad_lin + lin_root);
    const Rat a4 = quad_lin * lin_root - quad_const;
    const Rat a6 = lin_root * quad_const;
    // construct the curve before the aggregate: a throw during aggregate
    // initialization leaks the completed members under gcc (PR 66139)
    RatCurve curve = [&] {
        try {
            return RatCurve(a2, a4, a6);
        } catch (const SingularCurve&) {
            throw SingularFamily("bisector family discriminant vanishes");
        }
    }();
    return {lin_root, quad_lin, quad_const, std::move(curve)};
}

} // namespace

BisectorFamily::BisectorFamily(Rat half_area_n, Rat u)
    : n_(std::move(half_area_n)), u_(std::move(u)),
      lin_root_(Rat(0)), quad_lin_(Rat(0)), quad_const_(Rat(0)),
      curve_([&] {
          CurveParts parts = make_bisector_curve(n_, u_);
          lin_root_ = parts.lin_root;
          quad_lin_ = parts.quad_lin;
          quad_const_ = parts.quad_const;
          return parts.curve;
      }()) {}

Rat BisectorFamily::discriminant_closed_form() const {
    const Rat& n = n_;
    const Rat& u = u_;
    const Rat n2 = n * n, u2 = u * u;
    const Rat n3 = n2 * n, u3 = u2 * u;
    const Rat n4 = n2 * n2, u4 = u2 * u2;
    const Rat quartic_factor = (n4 + Rat(18) * n2 + Rat(1)) * u4 +
                               Rat(16) * n * (n2 - Rat(3)) * u3 +
                               Rat(2) * (n4 - Rat(30) * n2 + Rat(17)) * u2 -
                               Rat(16) * n * (n2 - Rat(3)) * u + n4 + Rat(18) * n2 + Rat(1);
    return pow_int(Rat(2), 12) * pow_int(n2 + Rat(1), 8) * pow_int(u + n, 4) *
           pow_int(n * u - Rat(1), 4) * (u2 + Rat(1)).squared() *
           pow_int((u2 - Rat(1)) * n - Rat(2) * u, 4) * quartic_factor;
}

Rat BisectorFamily::quartic_w2(const Rat& t) const {
    const Rat a = n_ + u_;
    const Rat b = n_ * u_ - Rat(1);
    const Rat L = factor_l(n_, u_);
    const Rat ab = a * b;
    const Rat t2 = t * t;
    return Rat(4) * ab.squared() * t2 * t2 + Rat(4) * ab * L * t2 * t +
           t2_coefficient(n_, u_) * t2 - Rat(4) * ab * L * t + Rat(4) * ab.squared();
}

RatPoint BisectorFamily::forward(const Rat& t, const Rat& w) const {
    if (t.is_zero()) throw MapUndefined("bisector forward map undefined at t = 0");
    if (w * w != quartic_w2(t)) throw NotOnQuartic("w^2 != bisector quartic(t)");
    const Rat a = n_ + u_;
    const Rat b = n_ * u_ - Rat(1);
    const Rat L = factor_l(n_, u_);
    const Rat T2 = t2_coefficient(n_, u_);
    const Rat ab = a * b;
    const Rat t2 = t * t, t3 = t * t * t;

    const Rat y = (Rat(4) * ab / t3) *
                  (Rat(2) * L * ab * t3 + T2 * t2 + Rat(8) * ab.squared() -
                   Rat(6) * L * ab * t + Rat(4) * ab * w - L * t * w);

    const Rat n2 = n_ * n_, u2 = u_ * u_;
    const Rat n3 = n2 * n_, u3 = u2 * u_;
    const Rat n4 = n2 * n2, u4 = u2 * u2;
    const Rat n5 = n4 * n_, n6 = n4 * n2;
    const Rat x_t2 = n6 * u4 - Rat(2) * n6 * u2 - Rat(4) * n5 * u3 + Rat(2) * n4 * u4 + n6 +
                     Rat(4) * n5 * u_ - Rat(8) * n4 * u2 - Rat(24) * n3 * u3 -
                     Rat(7) * n2 * u4 + Rat(2) * n4 + Rat(24) * n3 * u_ + Rat(38) * n2 * u2 +
                     Rat(12) * n_ * u3 - Rat(7) * n2 - Rat(12) * n_ * u_ - Rat(4) * u2;
    const Rat x = (Rat(8) * ab.squared() - Rat(4) * L * ab * t + x_t2 * t2 + Rat(4) * ab * w) / t2;

    RatPoint p{x, y};
    if (!curve_.contains(p)) throw NotOnQuartic("bisector forward image not on curve");
    return p;
}

std::pair<Rat, Rat> BisectorFamily::inverse(const RatPoint& p) const {
    if (p.infinity) throw MapUndefined("bisector inverse map undefined at infinity");
    const Rat a = n_ + u_;
    const Rat b = n_ * u_ - Rat(1);
    const Rat L = factor_l(n_, u_);
    const Rat K = factor_k(n_, u_);
    const Rat c = n_ * n_ + Rat(1);
    const Rat K2c2 = K.squared() * c.squared();
    const Rat& x = p.x;
    const Rat& y = p.y;

    const Rat den_t = L * K2c2 - L * x - y;
    if (den_t.is_zero()) throw MapUndefined("bisector inverse: t-denominator vanishes");
    const Rat t = Rat(-4) * b * x * a / den_t;

    const Rat n2 = n_ * n_, u2 = u_ * u_;
    const Rat n3 = n2 * n_, u3 = u2 * u_;
    const Rat n4 = n2 * n2, u4 = u2 * u2;
    const Rat w_x2 = Rat(2) * n4 * u4 - Rat(8) * n4 * u2 - Rat(20) * n3 * u3 -
                     Rat(7) * n2 * u4 + Rat(2) * n4 + Rat(20) * n3 * u_ + Rat(34) * n2 * u2 +
                     Rat(12) * n_ * u3 - u4 - Rat(7) * n2 - Rat(12) * n_ * u_ - Rat(6) * u2 -
                     Rat(1);
    const Rat num_w = L.squared() * K2c2.squared() - Rat(2) * L * K2c2 * y +
                      w_x2 * (n2 + Rat(1)) * x * x - Rat(2) * x * x * x + y * y;
    const Rat den_w = L.squared() * K2c2.squared() - Rat(2) * L.squared() * K2c2 * x -
                      Rat(2) * L * K2c2 * y + L.squared() * x * x + Rat(2) * L * y * x + y * y;
    if (den_w.is_zero()) throw MapUndefined("bisector inverse: w-denominator vanishes");
    const Rat w = Rat(-2) * b * a * num_w / den_w;
    return {t, w};
}

RatPoint BisectorFamily::point_q() const {
    const Rat c = n_ * n_ + Rat(1);
    return {Rat(0), c.squared() * factor_k(n_, u_).squared() * factor_s(n_, u_)};
}

std::optional<BisectorConfig> BisectorFamily::reconstruct(const Rat& t, const Rat& w) const {
    if (t.sign() <= 0 || n_.sign() <= 0 || u_.sign() <= 0) return std::nullopt;
    if (w * w != quartic_w2(t)) throw NotOnQuartic("w^2 != bisector quartic(t)");

    const RatAngle half_area(n_), alpha(t), beta(u_);
    const GaussRat e_half_area = half_area.unit();
    const GaussRat e_area = e_half_area * e_half_area;

    // full-triangle closure with area 2 * (A/2)
    const GaussRat closure = e_area * alpha.unit() * beta.unit();
    const GaussRat e_gamma = -closure.conj();
    Rat t_gamma;
    try {
        t_gamma = angle_param_from_unit(e_gamma);
    } catch (const DegenerateAngle&) {
        return std::nullopt;
    }
    if (t_gamma.sign() <= 0) return std::nullopt;
    const RatAngle gamma(t_gamma);

    const Rat cosh_a = cosh_from_angles(alpha, beta, gamma);
    const Rat cosh_b = cosh_from_angles(beta, alpha, gamma);
    const Rat cosh_c = cosh_from_angles(gamma, alpha, beta);
    if (!(cosh_a > Rat(1) && cosh_b > Rat(1) && cosh_c > Rat(1))) return std::nullopt;

    // w scales back to w1, and w1 carries sin(alpha_1)
    const Rat w1 = Rat(4) * n_ * w /
                   ((n_ * n_ + Rat(1)).squared() * (t * t + Rat(1)) * (u_ * u_ + Rat(1)));
    if (w1.is_zero()) return std::nullopt;
    const GaussRat e_halfarea_beta = e_half_area * beta.unit();   // e^{i(A/2 + beta)}
    const Rat denom = beta.cos() - e_halfarea_beta.re();
    if (denom.is_zero()) return std::nullopt;
    const Rat sin_a1 = denom * alpha.sin() / w1;
    // cos(alpha_1) is determined linearly by eq:acosthm
    const Rat cos_a1 = sin_a1 * (beta.sin() * cosh_c - e_halfarea_beta.im()) / denom;
    if (sin_a1 * sin_a1 + cos_a1 * cos_a1 != Rat(1)) return std::nullopt;
    if (sin_a1.sign() <= 0 || cos_a1 == Rat(-1)) return std::nullopt;
    const Rat t_alpha1 = sin_a1 / (Rat(1) + cos_a1);

    // alpha - alpha_1 must be a positive angle
    const GaussRat e_rest = alpha.unit() * GaussRat(cos_a1, sin_a1).conj();
    if (e_rest.im().sign() <= 0) return std::nullopt;

    // theta = pi - A/2 - alpha_1 - beta via the unit circle
    const GaussRat sub_closure = e_half_area * GaussRat(cos_a1, sin_a1) * beta.unit();
    const GaussRat e_theta = -sub_closure.conj();
    Rat t_theta;
    try {
        t_theta = angle_param_from_unit(e_theta);
    } catch (const DegenerateAngle&) {
        return std::nullopt;
    }
    if (t_theta.sign() <= 0) return std::nullopt;

    // eq:acosthm holds by construction; keep it as a hard consistency gate
    if (sin_a1 * beta.sin() * cosh_c != -sub_closure.re() + cos_a1 * beta.cos())
        return std::nullopt;

    BisectorConfig cfg;
    cfg.t_alpha = t;
    cfg.t_alpha1 = t_alpha1;
    cfg.t_theta = t_theta;
    cfg.t_gamma = t_gamma;
    cfg.cosh_a = cosh_a;
    cfg.cosh_b = cosh_b;
    cfg.cosh_c = cosh_c;

    // whole triangle Heron <=> sinh c rational <=> bisector length rational
    if (const auto sinh_c = rat_sqrt(cosh_c * cosh_c - Rat(1))) {
        cfg.heron = true;
        cfg.sinh_c = *sinh_c;
        const RatAngle theta(t_theta);
        const Rat sinh_m = beta.sin() * *sinh_c / theta.sin();
        const auto cosh_m = rat_sqrt(Rat(1) + sinh_m * sinh_m);
        if (!cosh_m) return std::nullopt;   // cannot happen: cosh^2 = 1 + sinh^2 exactly
        cfg.sinh_bisector = sinh_m;
        cfg.cosh_bisector = *cosh_m;
    }
    return cfg;
}

std::vector<BisectorConfig> BisectorFamily::enumerate(long k_max, long max_count) const {
    std::vector<BisectorConfig> out;
    if (k_max < 1) return out;
    const RatPoint Q = point_q();
    const RatPoint T = two_torsion_point();
    std::vector<Rat> seen;
    RatPoint fwd = RatPoint::inf();
    bool done = false;
    for (long k = 1; k <= k_max && !done; ++k) {
        fwd = curve_.add(fwd, Q);
        for (long sign : {+1L, -1L}) {
            if (done) break;
            const RatPoint base = sign > 0 ? fwd : curve_.neg(fwd);
            for (int ti = 0; ti < 2 && !done; ++ti) {
                const RatPoint p = ti == 0 ? base : curve_.add(base, T);
                if (p.infinity || p.x.is_zero()) continue;
                Rat t, w;
                try {
                    std::tie(t, w) = inverse(p);
                } catch (const MapUndefined&) {
                    continue;
                }
                if (t.is_zero() || w * w != quartic_w2(t)) continue;
                std::optional<BisectorConfig> cfg;
                for (const Rat& ww : {w, -w}) {
                    cfg = reconstruct(t, ww);
                    if (cfg) break;
                }
                if (!cfg) continue;
                if (std::find(seen.begin(), seen.end(), cfg->t_alpha1) != seen.end()) continue;
                seen.push_back(cfg->t_alpha1);
                cfg->source = p;
                cfg->k = sign * k;
                out.push_back(std::move(*cfg));
                if (max_count > 0 && static_cast<long>(out.size()) >= max_count) done = true;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const BisectorConfig& a, const BisectorConfig& b) {
        const mpz_class ha = rat_height(a.t_alpha), hb = rat_height(b.t_alpha);
        if (ha != hb) return ha < hb;
        if (a.t_alpha != b.t_alpha) return a.t_alpha < b.t_alpha;
        return a.t_alpha1 < b.t_alpha1;
    });
    return out;
}

} // namespace hypheron
