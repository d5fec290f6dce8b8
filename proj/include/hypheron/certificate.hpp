#pragma once

#include "hypheron/angle_family.hpp"
#include "hypheron/hyperbolic.hpp"
#include "hypheron/side_family.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hypheron {

/// Serializable record tying a curve point to a verified triangle. All
/// rationals are emitted as strings; re-verification recomputes every
/// identity from the raw values.
struct Certificate {
    std::string family_kind;                          // "angle" or "side"
    std::vector<std::pair<std::string, Rat>> params;  // named family parameters
    RatPoint source;
    long k = 0;
    int torsion_index = 0;
    HyperbolicTriangle triangle;
    IdentityReport identities;
    std::string version;

    nlohmann::json to_json() const;
    static std::optional<Certificate> from_json(const nlohmann::json& j);
};

Certificate make_angle_certificate(const AngleFamily& family, const HeronCertificateData& data);
Certificate make_side_certificate(const SideFamily& family, const SideCompletion& completion);

struct VerifyOutcome {
    bool ok = false;
    std::string failure;
};

/// Re-derives the triangle from the stored family parameters and point and
/// checks every identity; the stored triangle must agree field by field.
VerifyOutcome verify_certificate(const Certificate& cert);

} // namespace hypheron
