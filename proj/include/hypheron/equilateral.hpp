#pragma once

#include "hypheron/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypheron {

/// The two reduced curves behind the equilateral non-existence results:
/// heron          y^2 = x (x^2 + x + 1)   via u = (x-1)/(x+1), v = 4y/(x+1)^2
/// median (side / angle flavours share the curve)
///                y^2 = x^3 + 10 x^2 + 9x via s = (9-x^2)/(8x), p = y/(4x)
enum class EquilateralKind { Heron, MedianRationalSide, MedianRationalAngle };

struct TorsionCheck {
    bool ok = false;
    std::vector<RatPoint> points;   // the verified torsion set, sorted
    std::string detail;
};

struct Rejection {
    std::string constraint;   // the violated triangle condition, e.g. "v = 0"
    std::string reason;
};

struct ScanReport {
    mpz_class height_bound;
    std::vector<RatPoint> found;
    bool only_known_torsion = false;   // evidence for rank 0, never a proof
};

class EquilateralCase {
  public:
    explicit EquilateralCase(EquilateralKind kind);

    EquilateralKind kind() const { return kind_; }
    const RatCurve& curve() const { return curve_; }

    /// Machine-checks the torsion claims: orders of the generators and the full
    /// generated group (8 points for the median curve, (0,0) alone for heron).
    TorsionCheck verify_torsion() const;

    /// Maps a verified torsion point back through the interpretation and
    /// names the triangle constraint it violates.
    std::optional<Rejection> interpret_and_reject(const RatPoint& p) const;

    /// Bounded-height evidence: the scan finds no points beyond the verified
    /// torsion set.
    ScanReport nonexistence_scan(const mpz_class& height_bound) const;

    /// Heron case: (u, v) with v^2 = -u^4 - 2u^2 + 3.
    /// Median cases: (p, s) with s^2 = 4p^4 - 5p^2 + 1.
    std::optional<std::pair<Rat, Rat>> interpret(const RatPoint& p) const;

  private:
    EquilateralKind kind_;
    RatCurve curve_;
};

} // namespace hypheron
