#include "hypheron/certificate.hpp"

#include "hypheron/version.hpp"

namespace hypheron {

nlohmann::json Certificate::to_json() const {
    nlohmann::json fam;
    fam["kind"] = family_kind;
    for (const auto& [name, value] : params) fam[name] = value.str();
    nlohmann::json j;
    j["family"] = fam;
    j["point"] = {{"x", source.x.str()}, {"y", source.y.str()}};
    j["k"] = k;
    j["torsionIndex"] = torsion_index;
    j["triangle"] = triangle.to_json();
    j["identities"] = identities.to_json();
    j["version"] = version.empty() ? kVersion : version;
    return j;
}

std::optional<Certificate> Certificate::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("point") ||
        !j.contains("triangle"))
        return std::nullopt;
    Certificate cert;
    const auto& fam = j["family"];
    if (!fam.contains("kind") || !fam["kind"].is_string()) return std::nullopt;
    cert.family_kind = fam["kind"].get<std::string>();
    for (auto it = fam.begin(); it != fam.end(); ++it) {
        if (it.key() == "kind") continue;
        if (!it.value().is_string()) return std::nullopt;
        const auto r = Rat::parse(it.value().get<std::string>());
        if (!r) return std::nullopt;
        cert.params.emplace_back(it.key(), *r);
    }
    const auto& pt = j["point"];
    if (!pt.contains("x") || !pt.contains("y")) return std::nullopt;
    const auto x = Rat::parse(pt["x"].get<std::string>());
    const auto y = Rat::parse(pt["y"].get<std::string>());
    if (!x || !y) return std::nullopt;
    cert.source = RatPoint{*x, *y};
    cert.k = j.value("k", 0L);
    cert.torsion_index = j.value("torsionIndex", 0);
    auto tri = HyperbolicTriangle::from_json(j["triangle"]);
    if (!tri) return std::nullopt;
    cert.triangle = std::move(*tri);
    cert.identities = {};
    cert.version = j.value("version", "");
    return cert;
}

Certificate make_angle_certificate(const AngleFamily& family, const HeronCertificateData& data) {
    Certificate cert;
    cert.family_kind = "angle";
    cert.params = {{"m", family.m()}, {"u", family.u()}};
    cert.source = data.source;
    cert.k = data.k;
    cert.torsion_index = data.torsion_index;
    cert.triangle = data.triangle;
    cert.identities = verify_triangle(data.triangle);
    cert.version = kVersion;
    return cert;
}

Certificate make_side_certificate(const SideFamily& family, const SideCompletion& completion) {
    Certificate cert;
    cert.family_kind = "side";
    cert.params = {{"v", family.v()}, {"w", family.w()}};
    cert.source = completion.source;
    cert.triangle = completion.triangle;
    cert.identities = verify_triangle(completion.triangle);
    cert.version = kVersion;
    return cert;
}

namespace {

std::optional<Rat> find_param(const Certificate& cert, const std::string& name) {
    for (const auto& [key, value] : cert.params)
        if (key == name) return value;
    return std::nullopt;
}

VerifyOutcome fail(std::string why) { return {false, std::move(why)}; }

VerifyOutcome verify_angle(const Certificate& cert) {
    const auto m = find_param(cert, "m");
    const auto u = find_param(cert, "u");
    if (!m || !u) return fail("missing family parameters m, u");
    try {
        const AngleFamily family(*m, *u);
        if (!family.curve().contains(cert.source)) return fail("source point not on E_{m,u}");
        const auto tri = family.triangle_from_point(cert.source);
        if (!tri) return fail("source point does not yield an admissible triangle");
        if (!(*tri == cert.triangle)) return fail("stored triangle disagrees with recomputation");
        const IdentityReport report = verify_triangle(*tri);
        if (!report.valid() || !report.heron) return fail("identity re-check failed");
    } catch (const SingularFamily&) {
        return fail("family parameters are singular");
    }
    return {true, {}};
}

VerifyOutcome verify_side(const Certificate& cert) {
    const auto v = find_param(cert, "v");
    const auto w = find_param(cert, "w");
    if (!v || !w) return fail("missing family parameters v, w");
    try {
        const SideFamily family(*v, *w);
        if (!family.curve().contains(cert.source)) return fail("source point not on E_{v,w}");
        const auto completion = family.triangle_from_point(cert.source);
        if (!completion) return fail("source point does not yield a side completion");
        if (!(completion->triangle == cert.triangle))
            return fail("stored triangle disagrees with recomputation");
        const IdentityReport report = verify_triangle(completion->triangle);
        if (!report.valid() || !report.heron) return fail("identity re-check failed");
    } catch (const SingularFamily&) {
        return fail("family parameters are singular");
    }
    return {true, {}};
}

} // namespace

VerifyOutcome verify_certificate(const Certificate& cert) {
    if (cert.family_kind == "angle") return verify_angle(cert);
    if (cert.family_kind == "side") return verify_side(cert);
    return fail("unknown family kind: " + cert.family_kind);
}

} // namespace hypheron
