#pragma once

#include <stdexcept>
#include <string>

namespace hypheron {

struct SingularCurve : std::domain_error {
    explicit SingularCurve(const std::string& what) : std::domain_error(what) {}
};

struct SingularFamily : std::domain_error {
    explicit SingularFamily(const std::string& what) : std::domain_error(what) {}
};

// Change-of-variables map evaluated on its excluded locus.
struct MapUndefined : std::domain_error {
    explicit MapUndefined(const std::string& what) : std::domain_error(what) {}
};

// (t, w) handed to a forward map without w^2 matching the quartic.
struct NotOnQuartic : std::invalid_argument {
    explicit NotOnQuartic(const std::string& what) : std::invalid_argument(what) {}
};

// Inverse of the angle map on the line y + (m+u)(1-mu)(x-n) = 0.
struct ExcludedLine : std::domain_error {
    explicit ExcludedLine(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateDenominator : std::domain_error {
    explicit DegenerateDenominator(const std::string& what) : std::domain_error(what) {}
};

// Angle with e^{i x} = -1: the half-tangent parameter does not exist.
struct DegenerateAngle : std::domain_error {
    explicit DegenerateAngle(const std::string& what) : std::domain_error(what) {}
};

} // namespace hypheron
