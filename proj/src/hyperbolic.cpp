#include "hypheron/hyperbolic.hpp"

namespace hypheron {

RatLength::RatLength(Rat q) : q_(std::move(q)) {
    if (q_.is_zero()) throw std::domain_error("RatLength: e^x must be nonzero");
}

Rat angle_param_from_unit(const GaussRat& u) {
    const Rat one_plus_cos = Rat(1) + u.re();
    if (one_plus_cos.is_zero()) throw DegenerateAngle("angle parameter undefined at pi");
    return u.im() / one_plus_cos;
}

Rat gauss_bonnet_gamma(const Rat& m, const Rat& t_alpha, const Rat& t_beta) {
    const GaussRat prod = RatAngle(m).unit() * RatAngle(t_alpha).unit() * RatAngle(t_beta).unit();
    const GaussRat e_gamma = -prod.conj();
    return angle_param_from_unit(e_gamma);
}

Rat cosh_from_angles(const RatAngle& opp, const RatAngle& adj1, const RatAngle& adj2) {
    const Rat s1 = adj1.sin(), s2 = adj2.sin();
    if (s1.is_zero() || s2.is_zero())
        throw DegenerateAngle("law of cosines with a degenerate adjacent angle");
    return (opp.cos() + adj1.cos() * adj2.cos()) / (s1 * s2);
}

Rat delta1_squared(const RatAngle& alpha, const RatAngle& beta, const RatAngle& gamma) {
    const Rat lhs = alpha.cos() + beta.cos() * gamma.cos();
    const Rat sb = beta.sin(), sg = gamma.sin();
    return lhs * lhs - sb * sb * sg * sg;
}

Rat sin_area_from_sides(const RatAngle& alpha, const RatAngle& beta, const RatAngle& gamma) {
    const Rat sa = alpha.sin(), sb = beta.sin(), sg = gamma.sin();
    const Rat ca = alpha.cos(), cb = beta.cos(), cg = gamma.cos();
    return -sa * sb * sg + sa * cb * cg + sb * ca * cg + sg * ca * cb;
}

Rat delta2_squared(const RatLength& u, const RatLength& v, const RatLength& w) {
    const Rat a = u.exp(), b = v.exp(), c = w.exp();
    const Rat num = (a * b - c) * (a * c - b) * (b * c - a) * (a * b * c - Rat(1));
    return num / (Rat(4) * a * a * b * b * c * c);
}

std::optional<Rat> HyperbolicTriangle::exp_a() const {
    if (!sinh_a) return std::nullopt;
    return cosh_a + *sinh_a;
}
std::optional<Rat> HyperbolicTriangle::exp_b() const {
    if (!sinh_b) return std::nullopt;
    return cosh_b + *sinh_b;
}
std::optional<Rat> HyperbolicTriangle::exp_c() const {
    if (!sinh_c) return std::nullopt;
    return cosh_c + *sinh_c;
}

nlohmann::json HyperbolicTriangle::to_json() const {
    nlohmann::json j;
    j["tAlpha"] = t_alpha.str();
    j["tBeta"] = t_beta.str();
    j["tGamma"] = t_gamma.str();
    j["m"] = m.str();
    if (auto e = exp_a()) j["expA"] = e->str();
    if (auto e = exp_b()) j["expB"] = e->str();
    if (auto e = exp_c()) j["expC"] = e->str();
    j["heron"] = heron();
    return j;
}

std::optional<HyperbolicTriangle> HyperbolicTriangle::from_json(const nlohmann::json& j) {
    auto get = [&j](const char* key) -> std::optional<Rat> {
        if (!j.contains(key) || !j[key].is_string()) return std::nullopt;
        return Rat::parse(j[key].get<std::string>());
    };
    const auto ta = get("tAlpha"), tb = get("tBeta"), tg = get("tGamma"), m = get("m");
    if (!ta || !tb || !tg || !m) return std::nullopt;
    HyperbolicTriangle t;
    t.t_alpha = *ta;
    t.t_beta = *tb;
    t.t_gamma = *tg;
    t.m = *m;
    try {
        t.cosh_a = cosh_from_angles(RatAngle(*ta), RatAngle(*tb), RatAngle(*tg));
        t.cosh_b = cosh_from_angles(RatAngle(*tb), RatAngle(*ta), RatAngle(*tg));
        t.cosh_c = cosh_from_angles(RatAngle(*tg), RatAngle(*ta), RatAngle(*tb));
    } catch (const DegenerateAngle&) {
        return std::nullopt;
    }
    auto side = [&](const char* key, const Rat& cosh) -> std::optional<Rat> {
        const auto e = get(key);
        if (!e) return std::nullopt;
        return *e - cosh;   // sinh = e^x - cosh x
    };
    t.sinh_a = side("expA", t.cosh_a);
    t.sinh_b = side("expB", t.cosh_b);
    t.sinh_c = side("expC", t.cosh_c);
    if (t.sinh_a && t.sinh_b) {
        const RatAngle beta(t.t_beta), gamma(t.t_gamma);
        t.delta1 = *t.sinh_a * beta.sin() * gamma.sin();
    }
    return t;
}

nlohmann::json IdentityReport::to_json() const {
    return nlohmann::json{{"lawCosA", law_cos_a},       {"lawCosB", law_cos_b},
                          {"lawCosC", law_cos_c},       {"lawSines", law_sines},
                          {"gaussBonnet", gauss_bonnet}, {"sinhConsistent", sinh_consistent},
                          {"heron", heron}};
}

IdentityReport verify_triangle(const HyperbolicTriangle& t) {
    IdentityReport r;
    const RatAngle alpha(t.t_alpha), beta(t.t_beta), gamma(t.t_gamma), area(t.m);

    const Rat sa = alpha.sin(), sb = beta.sin(), sg = gamma.sin();
    if (sa.is_zero() || sb.is_zero() || sg.is_zero()) return r;   // degenerate: nothing holds

    r.law_cos_a = (sb * sg * t.cosh_a == alpha.cos() + beta.cos() * gamma.cos());
    r.law_cos_b = (sa * sg * t.cosh_b == beta.cos() + alpha.cos() * gamma.cos());
    r.law_cos_c = (sa * sb * t.cosh_c == gamma.cos() + alpha.cos() * beta.cos());

    // Gauss-Bonnet as an exact unit-circle closure: e^{iA} e^{ia} e^{ib} e^{ig} = -1.
    const GaussRat closure = area.unit() * alpha.unit() * beta.unit() * gamma.unit();
    r.gauss_bonnet = (closure == GaussRat(Rat(-1), Rat(0)));

    r.sinh_consistent = true;
    auto check_sinh = [&](const std::optional<Rat>& s, const Rat& c) {
        if (s && c * c - *s * *s != Rat(1)) r.sinh_consistent = false;
    };
    check_sinh(t.sinh_a, t.cosh_a);
    check_sinh(t.sinh_b, t.cosh_b);
    check_sinh(t.sinh_c, t.cosh_c);

    // Law of sines through the common value Delta_1 when the sinh are present;
    // vacuously true (and unused) when no side has a rational sinh.
    r.law_sines = true;
    if (t.heron()) {
        const Rat d1 = *t.sinh_a * sb * sg;
        r.law_sines = (d1 == *t.sinh_b * sa * sg) && (d1 == *t.sinh_c * sa * sb);
        if (t.delta1 && *t.delta1 != d1) r.law_sines = false;
    } else if (t.sinh_a || t.sinh_b || t.sinh_c) {
        r.law_sines = false;   // partially rational sides cannot satisfy the law in Q
    }

    r.heron = t.heron();
    return r;
}

} // namespace hypheron
