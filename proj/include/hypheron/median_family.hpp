#pragma once

#include "hypheron/curve.hpp"
#include "hypheron/hyperbolic.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hypheron {

/// Triangle with rational sides e^a = u^2, e^b = v, e^c = w and a rational
/// median to side a. Angles (hence the Heron flag) are carried only when
/// delta2 happens to be a square.
struct MedianTriangle {
    Rat exp_a, exp_b, exp_c;
    Rat cosh_median, sinh_median;
    Rat exp_median() const { return cosh_median + sinh_median; }
    std::optional<HyperbolicTriangle> full;   // present iff all angles rational
    RatPoint source;
    long k = 0;
};

/// Family E_{u,w} for triangles with sides a = 2 log u, c = log w and a
/// rational median meeting side a.
class MedianFamily {
  public:
    MedianFamily(Rat u, Rat w);   // throws SingularFamily (u=0, w=0 or disc=0)

    const Rat& u() const { return u_; }
    const Rat& w() const { return w_; }
    const RatCurve& curve() const { return curve_; }

    /// u^2 = 1 or w^2 = 1: the family exists but every triangle is degenerate.
    bool degenerate_side() const { return u_ * u_ == Rat(1) || w_ * w_ == Rat(1); }

    /// 2^12 u^4 w^8 (u^2+1)^4 times the four printed quadratic factors.
    Rat discriminant_closed_form() const;

    /// t^2 = (v^2 w + w + v w^2 + v)^2 u^2 - 4 v^2 w^2 (u^2+1)^2; a rational
    /// median exists exactly when this is a square.
    Rat quartic_t2(const Rat& v) const;

    /// (v, t) -> curve point. Throws NotOnQuartic.
    RatPoint forward(const Rat& v, const Rat& t) const;

    /// Curve point -> (v, t). Throws MapUndefined at x = 0.
    std::pair<Rat, Rat> inverse(const RatPoint& p) const;

    /// P(u,w) = (0, 4u (u^2+1)^2 w^2 (w^2+1)), infinite order.
    RatPoint point_p() const;

    /// Triangle with exact rational median from a rational point; empty when
    /// the recovered sides violate positivity or the triangle inequalities.
    std::optional<MedianTriangle> triangle_from_point(const RatPoint& p) const;

    /// Multiples k P + (-kP) for |k| <= k_max filtered through
    /// triangle_from_point; sorted by height of v.
    std::vector<MedianTriangle> enumerate(long k_max, long max_count = 0) const;

  private:
    Rat u_, w_;
    RatCurve curve_;
};

/// The free-standing quartic of the median condition, symmetric in v and w.
Rat median_quartic(const Rat& u, const Rat& v, const Rat& w);

} // namespace hypheron
