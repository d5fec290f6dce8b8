#pragma once

#include "hypheron/errors.hpp"
#include "hypheron/gaussian.hpp"
#include "hypheron/rat.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hypheron {

/// Rational angle stored as the half-tangent t; the angle lies in (0, pi)
/// exactly when t > 0.
class RatAngle {
  public:
    explicit RatAngle(Rat t) : t_(std::move(t)) {}

    const Rat& t() const { return t_; }
    bool positive() const { return t_.sign() > 0; }

    Rat cos() const {
        const Rat t2 = t_ * t_;
        return (Rat(1) - t2) / (Rat(1) + t2);
    }
    Rat sin() const { return Rat(2) * t_ / (Rat(1) + t_ * t_); }

    /// e^{i x} as a unit in Q(i); cos^2 + sin^2 = 1 holds exactly.
    GaussRat unit() const { return {cos(), sin()}; }

  private:
    Rat t_;
};

/// Rational length x stored as q = e^x; positive length exactly when q > 1.
class RatLength {
  public:
    explicit RatLength(Rat q);

    const Rat& exp() const { return q_; }
    bool positive() const { return q_ > Rat(1); }

    Rat cosh() const { return (q_ + q_.inverse()) / Rat(2); }
    Rat sinh() const { return (q_ - q_.inverse()) / Rat(2); }

  private:
    Rat q_;
};

/// Half-tangent of the angle with the given unit-circle value.
/// Throws DegenerateAngle at e^{i x} = -1.
Rat angle_param_from_unit(const GaussRat& u);

/// Exact triangle record: angle parameters, area parameter, cosh of the
/// sides, sinh present exactly when rational. Heron iff all three sinh
/// (equivalently delta1) are present.
struct HyperbolicTriangle {
    Rat t_alpha, t_beta, t_gamma;
    Rat m;                         // rational area parameter
    Rat cosh_a, cosh_b, cosh_c;
    std::optional<Rat> sinh_a, sinh_b, sinh_c;
    std::optional<Rat> delta1;

    bool heron() const { return sinh_a && sinh_b && sinh_c; }

    std::optional<Rat> exp_a() const;
    std::optional<Rat> exp_b() const;
    std::optional<Rat> exp_c() const;

    nlohmann::json to_json() const;
    static std::optional<HyperbolicTriangle> from_json(const nlohmann::json& j);

    friend bool operator==(const HyperbolicTriangle&, const HyperbolicTriangle&) = default;
};

/// Per-identity exact results; failures are reported, never thrown.
struct IdentityReport {
    bool law_cos_a = false;
    bool law_cos_b = false;
    bool law_cos_c = false;
    bool law_sines = false;
    bool gauss_bonnet = false;
    bool sinh_consistent = false;   // cosh^2 - sinh^2 = 1 for every present sinh
    bool heron = false;

    bool valid() const {
        return law_cos_a && law_cos_b && law_cos_c && law_sines && gauss_bonnet &&
               sinh_consistent;
    }

    nlohmann::json to_json() const;
};

/// t_gamma from the Gauss-Bonnet closure A + alpha + beta + gamma = pi,
/// computed as e^{i gamma} = -conj(e^{iA} e^{i alpha} e^{i beta}) in Q(i).
/// Positive output iff the four angles genuinely sum to pi (not 3 pi).
/// Throws DegenerateAngle when gamma = pi.
Rat gauss_bonnet_gamma(const Rat& m, const Rat& t_alpha, const Rat& t_beta);

/// cosh of the side opposite `opp` from the law of cosines for the angles:
/// sin(adj1) sin(adj2) cosh = cos(opp) + cos(adj1) cos(adj2).
Rat cosh_from_angles(const RatAngle& opp, const RatAngle& adj1, const RatAngle& adj2);

/// Delta_1^2 = (cos a + cos b cos g)^2 - sin^2 b sin^2 g; the triangle is
/// Heron exactly when this is a square.
Rat delta1_squared(const RatAngle& alpha, const RatAngle& beta, const RatAngle& gamma);

/// sin of the area from the three angles (side-parametrization identity).
Rat sin_area_from_sides(const RatAngle& alpha, const RatAngle& beta, const RatAngle& gamma);

/// Delta_2^2 from the side exponentials; all three angle sines are rational
/// exactly when this is a nonzero square.
Rat delta2_squared(const RatLength& u, const RatLength& v, const RatLength& w);

IdentityReport verify_triangle(const HyperbolicTriangle& t);

} // namespace hypheron
